use glsigma::groupcore::{AutoKind, AutoSpec};
use glsigma::oracle::{dixon_table, match_outer, outer_class_columns, semidirect_group};
use glsigma::tables::build_table;

fn run(kind: AutoKind, mutate: bool) -> glsigma::Result<glsigma::oracle::MatchReport> {
    let spec = AutoSpec::new(2, 5, kind)?;
    let table = build_table(2, 5, kind)?;
    let (g, elems) = semidirect_group(&spec)?;
    let oracle = dixon_table(&g)?;
    let columns = outer_class_columns(&g, &elems, |x| table.column_of(&spec, x).unwrap());
    assert_eq!(columns.iter().flatten().count(), table.columns.len());
    let mut block = table.outer_block();
    if mutate {
        let r = block.rows.iter().position(|r| r == "St").unwrap();
        block.values[r][3] = -block.values[r][3].clone();
    }
    match_outer(&oracle, &columns, &block, 5)
}

#[test]
fn printed_table_matches_the_oracle() {
    for kind in [AutoKind::Sigma, AutoKind::SigmaPrime] {
        let rep = run(kind, false).unwrap();
        assert_eq!(rep.nonzero_rows, 16);
        assert_eq!(rep.pairs, 8);
        assert_eq!(rep.vanishing_rows, 8);
        assert_eq!(rep.summary(), "matched 8/8 rows");
    }
}

#[test]
fn a_flipped_cell_is_named() {
    let err = run(AutoKind::Sigma, true).unwrap_err().to_string();
    assert!(err.contains("St"), "{err}");
}
