use wphodge::agecalc::age_spectrum;
use wphodge::arith::VisitBudget;
use wphodge::classify::{
    classify_weights, compare_tuple_sets, enumerate_canonical, general_hypersurface_quasismooth,
    parse_weight_list, summary_line, EnumerationBounds, HypersurfaceSpec, QuasismoothFailure, Tag,
};
use wphodge::golden;
use wphodge::WeightTuple;

#[test]
fn threefolds_split_into_95_and_9() {
    let budget = VisitBudget::default();
    let recs = enumerate_canonical(3, EnumerationBounds::default(), &budget).unwrap();
    assert_eq!(
        summary_line(&recs),
        "104 canonical (95 quasismooth, 9 additional)"
    );
    let extra: Vec<Vec<u64>> = recs
        .iter()
        .filter(|r| r.tag == Tag::AdditionalNine)
        .map(|r| r.weights.clone())
        .collect();
    let table1 = parse_weight_list(golden::TABLE1).unwrap();
    assert_eq!(table1.len(), 9);
    compare_tuple_sets(&table1, &extra, "weights").unwrap();
    // Every canonical quasismooth X_d in a weighted 3-space is a K3 surface.
    for r in &recs {
        assert_eq!(r.hodge[0], 1, "{:?}", r.weights);
        assert_eq!(r.hodge[2], 1, "{:?}", r.weights);
        assert!(r.general_xd_well_formed, "{:?}", r.weights);
    }
    let mut sorted = recs.iter().map(|r| r.weights.clone()).collect::<Vec<_>>();
    sorted.sort();
    assert_eq!(
        sorted,
        recs.iter().map(|r| r.weights.clone()).collect::<Vec<_>>()
    );
}

#[test]
fn famous_examples_are_tagged() {
    for w in [
        [1u64, 1, 1, 1],
        [1, 1, 1, 3],
        [7, 8, 10, 25],
        [5, 6, 22, 33],
    ] {
        assert_eq!(
            classify_weights(&WeightTuple::new(&w).unwrap()).tag,
            Tag::Famous95,
            "{w:?}"
        );
    }
}

#[test]
fn enumeration_is_independent_of_pool_size() {
    let bounds = EnumerationBounds {
        max_weight: 40,
        max_degree: 100,
    };
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| enumerate_canonical(3, bounds, &VisitBudget::default()).unwrap())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn fourfold_example_status() {
    let w = WeightTuple::new(&[15, 18, 19, 20, 27]).unwrap();
    let r = classify_weights(&w);
    assert!(r.canonical);
    assert_eq!(r.degree, 99);
    let q = general_hypersurface_quasismooth(&HypersurfaceSpec::anticanonical(&w)).unwrap();
    assert_eq!(q.quasismooth, r.general_xd_quasismooth);
    // 99 is not a multiple of 15 and 99 − w_j is not for any other j,
    // so the point (x0 ≠ 0, others 0) is a singular point of every member.
    assert!(!q.quasismooth);
    assert_eq!(q.witness, Some(QuasismoothFailure::Subset(vec![0])));
    assert_eq!(r.tag, Tag::AdditionalNine);
    assert_eq!(age_spectrum(&w).counts, vec![1, 44, 44, 1]);
}
