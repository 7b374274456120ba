use glsigma::groupcore::AutoKind;
use glsigma::parametrize::{enum_char_types, enum_class_types, is_uniform};
use glsigma::partitions::{delta, h1h2_of, two_core};
use glsigma::tables::{build_table, char_type_of, regular_qss_value, rows_match_char_types, verify_orthogonality};
use glsigma::CycValue;

const QS: [u64; 3] = [5, 9, 13];

#[test]
fn orthogonality_holds_exactly() {
    for n in [2, 3] {
        for q in QS {
            let t = build_table(n, q, AutoKind::Sigma).unwrap();
            let rep = verify_orthogonality(&t, &t.class_sizes().unwrap()).unwrap();
            assert!(rep.passed(), "n={n} q={q}: {:?}", rep.failures);
        }
    }
}

#[test]
fn counts_agree_with_enumeration() {
    for n in [2, 3] {
        for q in QS {
            let t = build_table(n, q, AutoKind::Sigma).unwrap();
            assert_eq!(t.rows.len(), enum_char_types(n, q).unwrap().len());
            assert_eq!(t.columns.len(), enum_class_types(n, q).unwrap().len());
            assert!(rows_match_char_types(&t).unwrap());
            let mut data = t.column_data.clone();
            let mut all = enum_class_types(n, q).unwrap();
            data.sort();
            all.sort();
            assert_eq!(data, all);
        }
    }
}

#[test]
fn regular_cells_from_torus_sums() {
    for n in [2, 3] {
        for q in [5, 9] {
            let t = build_table(n, q, AutoKind::Sigma).unwrap();
            let mut checked = 0;
            for (r, row) in t.rows.iter().enumerate().filter(|(_, r)| r.family.is_parametric()) {
                for (c, col) in t.columns.iter().enumerate().filter(|(_, c)| c.is_regular()) {
                    assert_eq!(&regular_qss_value(n, q, row, col).unwrap(), t.value(r, c));
                    checked += 1;
                }
            }
            assert!(checked > 0);
        }
    }
}

#[test]
fn square_roots_follow_the_defect() {
    for n in [2, 3] {
        for q in [5, 13] {
            let t = build_table(n, q, AutoKind::Sigma).unwrap();
            for (r, row) in t.rows.iter().enumerate() {
                let ty = char_type_of(n, row);
                if is_uniform(&ty) {
                    assert!(t.cells[r].iter().all(|c| !c.value.has_sqrt_part()));
                    continue;
                }
                let (mp, mm) = (two_core(&ty.lam_plus), two_core(&ty.lam_minus));
                let h = h1h2_of(&mp, &mm);
                let d = delta(h.h1, h.h2);
                assert_eq!(d % 2, 1);
                let root = CycValue::sqrt_q(t.conductor, q);
                let mut scale = root.clone();
                for _ in 0..d / 2 {
                    scale = &scale * &CycValue::from_int(t.conductor, q, q as i64);
                }
                for c in &t.cells[r] {
                    assert!(c.value.is_zero() || c.value == scale || c.value == -scale.clone());
                }
            }
        }
    }
}
