use covolume_core::covolume::{covolume, cross_path_discrepancy, multiplicity_bounds, nu};
use covolume_core::quadfield::fields_up_to;
use covolume_core::{QuadField, Span};

#[test]
fn nu_positive_on_grid() {
    for field in fields_up_to(200) {
        for n in 2..=40 {
            let v = nu(&field, n).unwrap();
            assert!(v.lower().is_positive() && v.upper().is_positive(), "{field} n={n}");
            assert!(v.lower() <= v.upper());
        }
    }
}

#[test]
fn eisenstein_field_is_smallest() {
    let fields = fields_up_to(200);
    for n in 2..=30 {
        let best = nu(&QuadField::eisenstein(), n).unwrap();
        let best = best.exact().expect("one ramified prime");
        for field in fields.iter().filter(|f| f.d() != 3) {
            assert!(best < nu(field, n).unwrap().lower(), "{field} n={n}");
        }
    }
}

#[test]
fn cross_path_agreement() {
    for field in fields_up_to(100).into_iter().filter(|f| f.r() == 1) {
        for n in 2..=20 {
            let gap = cross_path_discrepancy(&field, n).unwrap();
            assert!(gap <= 1e-9, "{field} n={n}: {gap:e}");
        }
    }
}

#[test]
fn interval_only_for_odd_n_with_several_ramified_primes() {
    for field in fields_up_to(200) {
        for n in 2..=12 {
            let exact = nu(&field, n).unwrap().is_exact();
            assert_eq!(exact, n % 2 == 0 || field.r() == 1, "{field} n={n}");
        }
    }
}

#[test]
fn multiplicity_bounds_are_ordered() {
    for field in fields_up_to(300) {
        for n in 2..=16 {
            match multiplicity_bounds(&field, n) {
                Ok((lo, hi)) => {
                    assert!(lo <= hi, "{field} n={n}");
                    if n % 2 == 0 {
                        assert!(lo >= 1 << field.r());
                    }
                }
                Err(_) => assert!(n % 2 == 1 && field.r() > 1, "{field} n={n}"),
            }
        }
    }
}

#[test]
fn aggregate_is_consistent() {
    for field in fields_up_to(80) {
        for n in 2..=10 {
            let result = covolume(&field, n).unwrap();
            assert_eq!(result.nu, nu(&field, n).unwrap());
            let chi_abs = result.chi.map(|c| c.abs());
            match (&chi_abs, &result.nu) {
                (Span::Exact(a), Span::Exact(b)) => assert_eq!(a, b),
                (Span::Interval { lower, upper }, Span::Interval { .. }) => {
                    assert_eq!(lower.min(upper), result.nu.lower());
                    assert_eq!(lower.max(upper), result.nu.upper());
                }
                _ => panic!("{field} n={n}: chi and nu disagree on exactness"),
            }
            assert!(result.volume.lower().value > 0.0);
        }
    }
}
