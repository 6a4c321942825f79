use covolume::SurveyRow;
use covolume_core::covolume::covolume;
use covolume_core::quadfield::fields_up_to;
use proptest::prelude::*;

fn rows() -> Vec<SurveyRow> {
    let fields = fields_up_to(120);
    fields.iter().flat_map(|f| (2..=12).map(move |n| SurveyRow::from_result(&covolume(f, n).unwrap()))).collect()
}

#[test]
fn every_row_round_trips() {
    for row in rows() {
        let json = row.to_json();
        assert_eq!(SurveyRow::from_json(&json).unwrap().to_json(), json);
        let csv = row.to_csv_line();
        assert_eq!(SurveyRow::from_csv_line(&csv).unwrap().to_csv_line(), csv);
        assert_eq!(csv.parse::<SurveyRow>().unwrap().to_csv_line(), csv);
    }
}

#[test]
fn exact_fields_never_hold_floats() {
    for row in rows() {
        let v: serde_json::Value = serde_json::from_str(&row.to_json()).unwrap();
        for key in ["nu", "chi", "index"] {
            let strings: Vec<&serde_json::Value> = match &v[key] {
                serde_json::Value::Object(m) => m.values().collect(),
                other => vec![other],
            };
            assert!(strings.iter().all(|s| s.as_str().is_some_and(|t| t.contains('/'))), "{key}: {v}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn arbitrary_rows_round_trip(
        d in 1u64..1_000_000,
        n in 2u32..200,
        nums in proptest::collection::vec(-1_000_000_000_000i64..1_000_000_000_000, 4),
        dens in proptest::collection::vec(1i64..1_000_000_000_000, 4),
        vol in proptest::collection::vec(1e-300f64..1e300, 2),
        interval in any::<bool>(),
        mult in proptest::option::of((1u64..64, 1u64..64)),
    ) {
        use covolume_core::{EpsilonStatus, ExactRational, Span};
        let q = |i: usize| ExactRational::new(nums[i], dens[i]).unwrap();
        let span = |a: usize, b: usize| if interval { Span::Interval { lower: q(a), upper: q(b) } } else { Span::Exact(q(a)) };
        let row = SurveyRow {
            d,
            disc: d * 4,
            n,
            nu: span(0, 1),
            chi: span(2, 3),
            volume: if interval {
                Span::Interval { lower: covolume::record::round12(vol[0]), upper: covolume::record::round12(vol[1]) }
            } else {
                Span::Exact(covolume::record::round12(vol[0]))
            },
            h: d % 17 + 1,
            h_torsion: 1,
            r: 2,
            epsilon: if interval { EpsilonStatus::Bounded { lower: 2, upper: 4 } } else { EpsilonStatus::Exact(2) },
            multiplicity: mult,
            index: None,
        };
        let json = row.to_json();
        let back = SurveyRow::from_json(&json).unwrap();
        prop_assert_eq!(&back, &row);
        prop_assert_eq!(back.to_json(), json);
        let csv = row.to_csv_line();
        let back = SurveyRow::from_csv_line(&csv).unwrap();
        prop_assert_eq!(&back, &row);
        prop_assert_eq!(back.to_csv_line(), csv);
    }
}
