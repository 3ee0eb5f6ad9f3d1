//! Exact-equality acceptance sweeps. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::time::Instant;

use binedge::betti::{betti_koszul, betti_squarefree_hochster};
use binedge::graph::{classify, enumerate_graphs, Family};
use binedge::groebner::initial_ideal;
use binedge::harness::{verify, Theorem, Verdict, VerifyOptions};
use binedge::{Fp, Graph, Ring};

const SEED: u64 = 20_240_531;

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn from_verdict(name: &'static str, verdict: Result<Verdict, impl std::fmt::Display>) -> Outcome {
    match verdict {
        Ok(v) => Outcome {
            name,
            pass: v.pass,
            detail: format!(
                "{} graphs, {} counterexamples{}",
                v.graphs_checked,
                v.counterexamples.len(),
                v.counterexamples
                    .first()
                    .map(|c| format!(", first: {} {:?}", c.detail, c.graph.edges))
                    .unwrap_or_default()
            ),
        },
        Err(e) => Outcome {
            name,
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

fn options(max_n: usize, labelings: usize) -> VerifyOptions {
    VerifyOptions {
        labelings,
        seed: SEED,
        ..VerifyOptions::new(max_n)
    }
}

fn depth_of_block_graphs() -> Outcome {
    from_verdict(
        "1 depth of block graphs (n <= 6, 3 labelings)",
        verify(Theorem::DepthBlock, options(6, 3)),
    )
}

fn regularity_of_c_ell_graphs() -> Outcome {
    from_verdict(
        "2 regularity of C_ell-graphs (n <= 7)",
        verify(Theorem::RegCell, options(7, 1)),
    )
}

fn caterpillar_characterization() -> Outcome {
    let name = "3 caterpillar characterization (trees n <= 7)";
    let mut outcome = from_verdict(name, verify(Theorem::RegTree, options(7, 1)));
    // The only non-caterpillar tree on 7 vertices is the spider with three
    // legs of length two.
    let trees = enumerate_graphs(Family::Tree, 7).expect("trees enumerate");
    let non_caterpillars: Vec<&Graph> = trees.iter().filter(|t| !classify(t).is_caterpillar).collect();
    let spider = Graph::new(7, &[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)]).unwrap();
    let reg = betti_koszul(&binedge::poly::edge_ideal(&spider, Fp::default()), 16)
        .and_then(|t| t.regularity());
    let spider_ok = non_caterpillars.len() == 1
        && classify(&spider).longest_induced_path.length == 4
        && matches!(reg, Ok(r) if r >= 5);
    outcome.pass &= spider_ok;
    outcome.detail += &format!(
        "; non-caterpillar classes at n = 7: {}, spider reg = {:?}",
        non_caterpillars.len(),
        reg
    );
    outcome
}

fn groebner_equivalence() -> Outcome {
    from_verdict(
        "4 admissible paths = reduced Buchberger basis (n <= 5, 200 random n = 6)",
        verify(
            Theorem::GbEquivalence,
            VerifyOptions {
                random: 200,
                ..options(5, 1)
            },
        ),
    )
}

fn initial_ideal_with_vertex_variables() -> Outcome {
    from_verdict(
        "5 in(J_G + (x_i, y_i)) = in(J_G) + (x_i, y_i) (all graphs n <= 5)",
        verify(Theorem::Lemma21, options(5, 1)),
    )
}

fn primary_decomposition() -> Outcome {
    from_verdict(
        "6 J_G = intersection of minimal primes (connected n <= 5)",
        verify(Theorem::PrimaryDec, options(5, 1)),
    )
}

fn regularity_bounds() -> Outcome {
    from_verdict(
        "7 ell <= reg(S/J_G) <= n - 1 (connected n <= 6)",
        verify(Theorem::MmBounds, options(6, 1)),
    )
}

fn leaf_split_identity() -> Outcome {
    from_verdict(
        "8 leaf-split identity for initial ideals (block graphs n <= 6)",
        verify(Theorem::LeafSplitInitial, options(6, 1)),
    )
}

fn hochster_matches_koszul() -> Outcome {
    let field = Fp::default();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for n in 1..=5 {
        for g in enumerate_graphs(Family::Connected, n).expect("connected graphs enumerate") {
            let ini = initial_ideal(&g);
            let h = betti_squarefree_hochster(&ini, field);
            let k = betti_koszul(&ini.to_ideal(Ring::new(n), field), 2 * n as u32 + 2);
            checked += 1;
            match (h, k) {
                (Ok(h), Ok(k)) if h == k => {}
                _ => mismatches.push(g.edges()),
            }
        }
    }
    Outcome {
        name: "9 Hochster and Koszul tables agree on in(J_G) (connected n <= 5)",
        pass: mismatches.is_empty(),
        detail: format!("{checked} graphs, {} mismatches", mismatches.len()),
    }
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Outcome; 9] = [
        depth_of_block_graphs,
        regularity_of_c_ell_graphs,
        caterpillar_characterization,
        groebner_equivalence,
        initial_ideal_with_vertex_variables,
        primary_decomposition,
        regularity_bounds,
        leaf_split_identity,
        hochster_matches_koszul,
    ];
    let mut failed = Vec::new();
    for criterion in criteria {
        let start = Instant::now();
        let o = criterion();
        println!(
            "{} criterion {} [{}; {:.1}s]",
            if o.pass { "PASS" } else { "FAIL" },
            o.name,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        if !o.pass {
            failed.push(o.name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
