use polywedge::census::{closed_form, count_small_covers, JTuple};
use polywedge::oracle::{
    build_complex, count_classes_bruteforce, search_size, verify, MAX_ASSIGNMENTS,
};
use polywedge::Error;

/// `J` with entries in `{1, 2}` and at most `max_n` vertices.
fn matrix(m: usize, max_n: usize) -> Vec<JTuple> {
    JTuple::all_up_to(m, 2)
        .filter(|j| j.vertex_count() <= max_n)
        .collect()
}

#[test]
fn facets_match_maximal_faces() {
    for m in 3..=7 {
        for jt in JTuple::all_up_to(m, 3).filter(|j| j.vertex_count() <= 10) {
            let k = build_complex(m, &jt).unwrap();
            assert_eq!(
                k.facets(),
                k.facets_by_maximality().as_slice(),
                "m={m} J=({jt})"
            );
            let expected: usize = (1..=m)
                .map(|p| {
                    let q = p % m + 1;
                    (1..=m)
                        .filter(|&r| r != p && r != q)
                        .map(|r| jt.get(r) as usize)
                        .product::<usize>()
                })
                .sum();
            assert_eq!(k.facets().len(), expected, "m={m} J=({jt})");
        }
    }
}

#[test]
fn bruteforce_matches_diagram_within_guard() {
    let mut checked = 0;
    let mut refused = 0;
    for m in 3..=6 {
        for jt in matrix(m, 12) {
            if search_size(m, &jt) > MAX_ASSIGNMENTS {
                let err = count_classes_bruteforce(m, &jt).unwrap_err();
                assert!(matches!(err, Error::Guard { .. }), "m={m} J=({jt}): {err}");
                refused += 1;
                continue;
            }
            let brute = count_classes_bruteforce(m, &jt).unwrap();
            assert_eq!(brute, count_small_covers(m, &jt).unwrap(), "m={m} J=({jt})");
            checked += 1;
        }
    }
    assert!(checked >= 100, "{checked} checked");
    assert!(refused > 0);
}

#[test]
fn bruteforce_matches_square_closed_form() {
    for jt in JTuple::all_up_to(4, 3).filter(|j| search_size(4, j) <= 2_000_000) {
        let brute = count_classes_bruteforce(4, &jt).unwrap();
        assert_eq!(brute, closed_form(4, &jt).unwrap(), "J=({jt})");
    }
}

#[test]
fn verification_report_shape() {
    let report = verify(4, &"2,1,1,1".parse().unwrap()).unwrap();
    assert!(report.agree);
    let json = serde_json::to_value(&report).unwrap();
    for key in [
        "m",
        "j",
        "diagram",
        "formula",
        "bruteforce",
        "agree",
        "witness",
    ] {
        assert!(json.get(key).is_some(), "missing {key}");
    }
    assert_eq!(json["diagram"], "5");
    assert_eq!(json["formula"], "5");
    assert_eq!(json["bruteforce"], "5");
}
