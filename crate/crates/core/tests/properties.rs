use amalgam_lat::export::{from_json, to_json};
use amalgam_lat::oracle::{exact_chi_la, exact_chi_lat, SearchLimits};
use amalgam_lat::selftest::check_properties;
use amalgam_lat::{
    build_amalgam, check, check_row_monotone, dispatch, lift_to_join, matrix_to_labeling, sign_even, sign_odd, weights,
    BuildError, Labeling, MonotoneOutcome, SimpleGraph,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

/// `(m, n, r)` with `2 <= m <= 5`, `2 <= n <= 12`, `r < n`.
fn params() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..=5, 2usize..=12).prop_flat_map(|(m, n)| (Just(m), Just(n), 0..n))
}

/// A graph on `p <= 5` vertices with at least one edge.
fn small_graph() -> impl Strategy<Value = SimpleGraph> {
    (2usize..=5).prop_flat_map(|p| {
        let slots: Vec<(usize, usize)> = (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).collect();
        let max = slots.len().min(7 - p.min(6)).max(1);
        subsequence(slots, 1..=max).prop_map(move |edges| SimpleGraph::from_edges(p, &edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn builder_outputs_satisfy_invariants((m, n, r) in params()) {
        match dispatch(m, n, r) {
            Ok(rep) => {
                let failures = check_properties(&rep);
                prop_assert!(failures.is_empty(), "({m},{n},{r}): {failures:?}");
                prop_assert_eq!(rep.graph().total_elements(), rep.matrix.labels().len());
            }
            Err(BuildError::UnsupportedParameters { .. }) => prop_assert!(n % 2 == 1 && r == 2 && m >= 4),
            Err(e) => prop_assert!(false, "({m},{n},{r}): {e}"),
        }
    }

    #[test]
    fn json_round_trip((m, n, r) in params()) {
        if let Ok(rep) = dispatch(m, n, r) {
            prop_assert_eq!(from_json(&to_json(&rep).unwrap()).unwrap(), rep);
        }
    }

    #[test]
    fn lift_keeps_old_weights((m, n, r) in params()) {
        let Ok(rep) = dispatch(m, n, r) else { return Ok(()) };
        match lift_to_join(&rep) {
            Ok(up) => {
                prop_assert_eq!(&up.weights[..rep.weights.len()], &rep.weights[..]);
                prop_assert_eq!(Some(*up.weights.last().unwrap()), rep.diag_sum);
                prop_assert!(up.colors <= rep.colors + 1);
                prop_assert!(up.matrix.is_bijective());
            }
            Err(BuildError::DiagonalCollision { diag_sum, vertex }) => {
                prop_assert_eq!(rep.weights[vertex], diag_sum);
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn weight_sum_identity(g in small_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p = g.order();
        let mut labels: Vec<u64> = (1..=(p + g.size()) as u64).collect();
        labels.shuffle(&mut rng);
        let f = Labeling::total(labels[..p].to_vec(), g.edges().iter().copied().zip(labels[p..].iter().copied()));
        let w = weights(&g, &f).unwrap();
        let edge_sum: u64 = f.edges.values().sum();
        prop_assert_eq!(w.iter().sum::<u64>(), f.vertices.iter().sum::<u64>() + 2 * edge_sum);
        let rep = check(&g, &f).unwrap();
        prop_assert!(rep.bijective);
        prop_assert_eq!(rep.proper, rep.violations.is_empty());
    }

    #[test]
    fn oracle_witnesses_verify(g in small_graph()) {
        for total in [true, false] {
            let run = |l: &SearchLimits| if total { exact_chi_lat(&g, l) } else { exact_chi_la(&g, l) };
            let res = run(&SearchLimits::default()).unwrap();
            let plain = run(&SearchLimits::unpruned()).unwrap();
            prop_assert_eq!(res.value, plain.value);
            if let (Some(v), Some(w)) = (res.value, res.witness.as_ref()) {
                let rep = check(&g, w).unwrap();
                prop_assert!(rep.is_valid());
                prop_assert_eq!(rep.colors, v);
                prop_assert!(v >= g.clique_number());
                prop_assert!(res.proven_exact);
            }
        }
    }

    #[test]
    fn sign_matrix_lines_vanish(n in 2usize..60) {
        let s = if n % 2 == 0 { sign_even(n) } else { sign_odd(n) };
        if let Ok(s) = s {
            prop_assert!(s.row_sums().iter().all(|&x| x == 0));
            prop_assert!(s.col_sums().iter().all(|&x| x == 0));
            prop_assert!(s.is_symmetric());
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn row_sum_lemma(a in 1usize..6, extra in 0usize..4, seed in any::<u64>()) {
        // labels in lexicographic order above the diagonal, an increasing
        // diagonal, then symmetry: the lemma's hypotheses by construction
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let b = a + extra;
        let mut rows = vec![vec![0u64; b]; a];
        let mut next = 0u64;
        for j in 0..a {
            for k in j + 1..b {
                next += rng.gen_range(1..4);
                rows[j][k] = next;
                if k < a {
                    rows[k][j] = next;
                }
            }
        }
        let mut d = 0u64;
        for (j, row) in rows.iter_mut().enumerate() {
            d += rng.gen_range(1..50);
            row[j] = d;
        }
        prop_assert_eq!(check_row_monotone(&rows), MonotoneOutcome::Increasing);
    }

    #[test]
    fn labeling_round_trips_through_matrix((m, n, r) in params()) {
        if let Ok(rep) = dispatch(m, n, r) {
            let g = build_amalgam(m, n, r).unwrap();
            let f = matrix_to_labeling(&rep.matrix, &g).unwrap();
            prop_assert_eq!(amalgam_lat::verify::labeling_to_matrix(&f, &g).unwrap(), rep.matrix);
        }
    }
}
