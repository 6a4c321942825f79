use covolume_core::quadfield::{fields_up_to, kronecker_symbol};
use covolume_core::{ClassGroup, FormClass};

#[test]
fn group_axioms_exhaustive() {
    for field in fields_up_to(500) {
        let g = ClassGroup::reduced_forms(&field);
        let e = g.identity();
        let classes = g.classes();
        for x in classes {
            assert!(x.is_reduced() && x.is_primitive(), "{field} {x}");
            assert_eq!(g.compose(x, &e).unwrap(), *x);
            assert_eq!(g.compose(x, &x.inverse().reduce()).unwrap(), e, "{field} {x}");
            for y in classes {
                let xy = g.compose(x, y).unwrap();
                assert!(g.contains(&xy), "{field} {x}*{y}");
                assert_eq!(xy, g.compose(y, x).unwrap(), "{field}");
            }
        }
        for x in classes {
            for y in classes {
                let xy = g.compose(x, y).unwrap();
                for z in classes {
                    let right = g.compose(x, &g.compose(y, z).unwrap()).unwrap();
                    assert_eq!(g.compose(&xy, z).unwrap(), right, "{field}");
                }
            }
        }
    }
}

#[test]
fn torsion_counts_divide_h() {
    for field in fields_up_to(500) {
        let g = ClassGroup::reduced_forms(&field);
        let h = g.h();
        assert_eq!(g.torsion_count(1), 1);
        assert_eq!(g.torsion_count(h), h, "{field}");
        for m in 1..=24u64 {
            let t = g.torsion_count(m);
            assert_eq!(h % t, 0, "{field} m={m}");
            // m | m' implies G[m] is a subgroup of G[m'].
            for k in 2..=4 {
                assert!(t <= g.torsion_count(m * k), "{field} m={m}");
            }
        }
        // 2-torsion of an imaginary quadratic class group has order 2^{r-1}.
        assert_eq!(g.torsion_count(2), 1 << (field.r() - 1), "{field}");
    }
}

#[test]
fn closure_of_classes_is_group() {
    for field in fields_up_to(500) {
        let g = ClassGroup::reduced_forms(&field);
        assert_eq!(g.closure(g.classes()).len() as u64, g.h(), "{field}");
        for x in g.classes() {
            let cyclic = g.closure(std::slice::from_ref(x));
            assert_eq!(cyclic.len() as u64, x.order(), "{field} {x}");
            assert_eq!(g.h() % x.order(), 0);
            assert_eq!(g.exponent() % x.order(), 0);
        }
    }
}

#[test]
fn forms_represent_split_primes() {
    // A prime p with chi(p) = 1 is represented by some reduced form.
    for field in fields_up_to(200) {
        let g = ClassGroup::reduced_forms(&field);
        for p in [2u64, 3, 5, 7, 11, 13] {
            if kronecker_symbol(field.disc_signed(), p).unwrap() != 1 {
                continue;
            }
            let p = p as i64;
            let hit = g.classes().iter().any(|f: &FormClass| {
                (-20i64..=20).any(|x| (-20i64..=20).any(|y| f.a * x * x + f.b * x * y + f.c * y * y == p))
            });
            assert!(hit, "{field} p={p}");
        }
    }
}
