//! Small test algebras used across the test suites, the examples and the
//! verification CLI.

use crate::algebra::{build_path_algebra, Algebra};
use crate::field::FieldSpec;
use crate::quiver::{Path, Quiver, Relation};

/// Builds a relation term list from (coefficient, arrow-name sequence) pairs.
pub fn relation(q: &Quiver, terms: &[(i64, &[&str])], field: FieldSpec) -> Relation {
    let terms = terms
        .iter()
        .map(|(c, names)| {
            let arrows: Vec<usize> = names
                .iter()
                .map(|n| q.arrow_index(n).expect("unknown arrow"))
                .collect();
            let source = q.arrows[arrows[0]].source;
            (field.from_int(*c), Path { source, arrows })
        })
        .collect();
    Relation { terms }
}

/// k[x]/(x^2): one loop, relation x*x.
pub fn t1(field: FieldSpec) -> Algebra {
    let q = Quiver::new(
        vec!["1".into()],
        vec![("x".into(), "1".into(), "1".into())],
    )
    .unwrap();
    let r = relation(&q, &[(1, &["x", "x"])], field);
    build_path_algebra(field, &q, &[r], None).unwrap()
}

/// The A2 path algebra: 1 -> 2, no relations.
pub fn t2(field: FieldSpec) -> Algebra {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("a".into(), "1".into(), "2".into())],
    )
    .unwrap();
    build_path_algebra(field, &q, &[], None).unwrap()
}

/// k[x]/(x^3): one loop with nilpotency bound 3.
pub fn t3(field: FieldSpec) -> Algebra {
    let q = Quiver::new(
        vec!["1".into()],
        vec![("x".into(), "1".into(), "1".into())],
    )
    .unwrap();
    build_path_algebra(field, &q, &[], Some(3)).unwrap()
}

/// Commutative square: 1 -> 2 -> 4 and 1 -> 3 -> 4 with a*b = c*d.
pub fn t4(field: FieldSpec) -> Algebra {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into(), "4".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "4".into()),
            ("c".into(), "1".into(), "3".into()),
            ("d".into(), "3".into(), "4".into()),
        ],
    )
    .unwrap();
    let r = relation(&q, &[(1, &["a", "b"]), (-1, &["c", "d"])], field);
    build_path_algebra(field, &q, &[r], None).unwrap()
}

/// A2 with the arrow reversed: 2 -> 1.
pub fn a2_reversed(field: FieldSpec) -> Algebra {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("a".into(), "2".into(), "1".into())],
    )
    .unwrap();
    build_path_algebra(field, &q, &[], None).unwrap()
}
