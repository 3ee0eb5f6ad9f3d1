//! Graph-layer results against brute-force oracles that share no code with
//! the library's recognizers or enumerators.

use std::collections::HashSet;

use binedge::graph::{
    classify_c_ell, enumerate_graphs, is_block_graph, is_caterpillar, is_caterpillar_by_spine,
    is_chordal, leaf_order, longest_induced_path, maximal_cliques, random_relabeling, Family,
};
use binedge::Graph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest edge bitmask over all relabelings.
fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.n();
    let index = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        // position of pair (a, b), 0-based vertices
        a * (2 * n - a - 1) / 2 + (b - a - 1)
    };
    let edges = g.edges();
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |acc, &(a, b)| acc | 1 << index(p[a - 1], p[b - 1]))
        })
        .min()
        .unwrap_or(0)
}

fn is_connected(g: &Graph) -> bool {
    let mut seen = vec![false; g.n() + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for w in 1..=g.n() {
            if g.has_edge(v, w) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

fn induced_is_cycle(g: &Graph, verts: &[usize]) -> bool {
    verts.len() >= 3
        && verts.iter().all(|&v| verts.iter().filter(|&&w| g.has_edge(v, w)).count() == 2)
        && {
            let sub: Vec<(usize, usize)> = verts
                .iter()
                .enumerate()
                .flat_map(|(a, &v)| {
                    verts[a + 1..]
                        .iter()
                        .enumerate()
                        .filter(move |(_, &w)| g.has_edge(v, w))
                        .map(move |(b, _)| (a + 1, a + b + 2))
                })
                .collect();
            is_connected(&Graph::new(verts.len(), &sub).unwrap())
        }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect())
}

/// No induced cycle of length at least four.
fn brute_chordal(g: &Graph) -> bool {
    subsets(g.n()).all(|s| s.len() < 4 || !induced_is_cycle(g, &s))
}

/// Chordal and no induced diamond (K4 minus an edge).
fn brute_block(g: &Graph) -> bool {
    brute_chordal(g)
        && subsets(g.n()).filter(|s| s.len() == 4).all(|s| {
            let edges = pairs(4)
                .iter()
                .filter(|&&(a, b)| g.has_edge(s[a - 1], s[b - 1]))
                .count();
            edges != 5
        })
}

fn classes(n: usize, keep: impl Fn(&Graph) -> bool) -> HashSet<u64> {
    let perms = permutations(n);
    labeled_graphs(n)
        .filter(|g| keep(g))
        .map(|g| brute_canonical(&g, &perms))
        .collect()
}

fn check_family(family: Family, n: usize, oracle: &HashSet<u64>) {
    let perms = permutations(n);
    let graphs = enumerate_graphs(family, n).unwrap();
    let found: HashSet<u64> = graphs.iter().map(|g| brute_canonical(g, &perms)).collect();
    assert_eq!(found.len(), graphs.len(), "{family} n={n}: duplicate classes");
    assert_eq!(&found, oracle, "{family} n={n}");
}

#[test]
fn connected_and_block_classes_match_brute_force() {
    for n in 1..=6 {
        let connected = classes(n, is_connected);
        check_family(Family::Connected, n, &connected);
        let block = classes(n, |g| is_connected(g) && brute_block(g));
        check_family(Family::ConnectedBlock, n, &block);
        let trees = classes(n, |g| is_connected(g) && g.edge_count() == n - 1);
        check_family(Family::Tree, n, &trees);
    }
    let counts: Vec<usize> = (1..=6)
        .map(|n| enumerate_graphs(Family::Connected, n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
}

/// Labeled trees on `n` vertices from Prüfer sequences.
fn labeled_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![Graph::path(n)];
    }
    let total = n.pow(n as u32 - 2);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| {
                    let v = code % n + 1;
                    code /= n;
                    v
                })
                .collect();
            let mut degree = vec![1usize; n + 1];
            for &v in &seq {
                degree[v] += 1;
            }
            let mut edges = Vec::new();
            for &v in &seq {
                let leaf = (1..=n).find(|&u| degree[u] == 1).unwrap();
                edges.push((leaf, v));
                degree[leaf] -= 1;
                degree[v] -= 1;
            }
            let rest: Vec<usize> = (1..=n).filter(|&u| degree[u] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::new(n, &edges).unwrap()
        })
        .collect()
}

#[test]
fn tree_classes_at_seven_vertices() {
    let perms = permutations(7);
    let oracle: HashSet<u64> = labeled_trees(7).iter().map(|t| brute_canonical(t, &perms)).collect();
    assert_eq!(oracle.len(), 11);
    check_family(Family::Tree, 7, &oracle);
}

#[test]
fn c_ell_family_is_the_c_ell_block_graphs() {
    for n in 1..=7 {
        let all = enumerate_graphs(Family::ConnectedBlock, n).unwrap();
        let expected: Vec<&Graph> = all.iter().filter(|g| classify_c_ell(g).is_some()).collect();
        let c_ell = enumerate_graphs(Family::CEll, n).unwrap();
        assert_eq!(c_ell.len(), expected.len());
        assert!(c_ell.iter().all(|g| is_block_graph(g) && classify_c_ell(g).is_some()));
    }
}

/// A tree is a caterpillar iff deleting its leaves leaves a path (or nothing).
fn caterpillar_by_deleting_leaves(t: &Graph) -> bool {
    let inner: Vec<usize> = (1..=t.n()).filter(|&v| t.degree(v) > 1).collect();
    inner.iter().all(|&v| inner.iter().filter(|&&w| t.has_edge(v, w)).count() <= 2)
}

#[test]
fn caterpillar_tests_agree() {
    for n in 1..=9 {
        for t in enumerate_graphs(Family::Tree, n).unwrap() {
            let expected = caterpillar_by_deleting_leaves(&t);
            assert_eq!(is_caterpillar(&t).unwrap(), expected, "{:?}", t.edges());
            assert_eq!(is_caterpillar_by_spine(&t).unwrap(), expected, "{:?}", t.edges());
            if n >= 2 {
                // Caterpillars are exactly the trees whose C_ell chain uses edges.
                let chain = classify_c_ell(&t);
                assert_eq!(chain.is_some(), expected, "{:?}", t.edges());
                if let Some(c) = chain {
                    assert!(c.chain.iter().all(|f| f.len() == 2));
                    assert_eq!(c.ell, longest_induced_path(&t).length);
                }
            }
        }
    }
    assert!(!is_caterpillar(&Graph::cycle(4)).is_ok());
}

#[test]
fn chordal_iff_leaf_order_on_all_small_graphs() {
    for n in 1..=6 {
        for g in labeled_graphs(n) {
            let chordal = brute_chordal(&g);
            assert_eq!(is_chordal(&g), chordal, "{:?}", g.edges());
            assert_eq!(leaf_order(&maximal_cliques(&g), None).is_ok(), chordal, "{:?}", g.edges());
            assert_eq!(is_block_graph(&g), brute_block(&g), "{:?}", g.edges());
        }
    }
}

fn brute_longest_induced_path(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| !s.is_empty())
        .filter(|s| {
            s.len() == 1
                || (is_connected(&{
                    let sub: Vec<(usize, usize)> = pairs(s.len())
                        .into_iter()
                        .filter(|&(a, b)| g.has_edge(s[a - 1], s[b - 1]))
                        .collect();
                    Graph::new(s.len(), &sub).unwrap()
                }) && {
                    let degs: Vec<usize> = s
                        .iter()
                        .map(|&v| s.iter().filter(|&&w| g.has_edge(v, w)).count())
                        .collect();
                    degs.iter().all(|&d| d <= 2) && degs.iter().filter(|&&d| d == 1).count() == 2
                })
        })
        .map(|s| s.len() - 1)
        .max()
        .unwrap_or(0)
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn longest_induced_path_matches_brute_force(g in arb_graph(7), seed in any::<u64>()) {
        let ell = longest_induced_path(&g);
        prop_assert_eq!(ell.length, brute_longest_induced_path(&g));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(longest_induced_path(&random_relabeling(&g, &mut rng)).length, ell.length);
        // the reported vertices really form an induced path
        let v = &ell.vertices;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                prop_assert_eq!(g.has_edge(v[a], v[b]), b == a + 1);
            }
        }
    }

    #[test]
    fn classification_is_label_invariant(g in arb_graph(7), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_relabeling(&g, &mut rng);
        prop_assert_eq!(is_chordal(&g), is_chordal(&h));
        prop_assert_eq!(is_block_graph(&g), is_block_graph(&h));
        prop_assert_eq!(
            classify_c_ell(&g).map(|c| c.ell),
            classify_c_ell(&h).map(|c| c.ell)
        );
    }
}
