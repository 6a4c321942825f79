//! Command-line front end for `covolume-core`: record formats, the
//! consistency self-check and the command implementations behind the
//! `covolume` binary.

pub mod commands;
pub mod output;
pub mod record;
pub mod selfcheck;

pub use output::{Format, Output, Table};
pub use record::SurveyRow;
