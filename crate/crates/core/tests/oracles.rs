//! Library results against brute-force oracles that share no code with it.

mod support;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use support::*;
use symat::ffmat::{FMatrix, FieldSpec, DEFAULT_ENUMERATION_CAP};
use symat::graphs::{graphical_symplectic_matroid, lagrangian_from_graph, EdgeLabeling, StarMode, WGraph};
use symat::poly::{interlace, restricted_tutte_martin, DEFAULT_TERM_CAP};
use symat::smatroid::{AdmissibleSet, JElement, SymplecticMatroid};
use symat::sympl::{code_distance, make_stabilizer};

fn fields() -> [FieldSpec; 2] {
    [FieldSpec::gf2(), FieldSpec::new(3).unwrap()]
}

#[test]
fn bases_agree_with_cofactor_determinants() {
    let mut rng = StdRng::seed_from_u64(11);
    for f in fields() {
        for _ in 0..40 {
            let n = rng.gen_range(1..=4);
            let k = rng.gen_range(1..=n);
            let m = random_isotropic(&mut rng, f, n, k);
            let lib = SymplecticMatroid::bases_from_representation(&m).unwrap();
            assert_eq!(sorted_names(lib.bases()), oracle_bases(&m), "{f}\n{m}");
        }
    }
}

#[test]
fn circuits_agree_with_the_definition() {
    let mut rng = StdRng::seed_from_u64(12);
    for f in fields() {
        for _ in 0..30 {
            let n = rng.gen_range(1..=4);
            let k = rng.gen_range(1..=n);
            let m = SymplecticMatroid::bases_from_representation(&random_isotropic(&mut rng, f, n, k)).unwrap();
            let bases: Vec<Vec<JElement>> = m.bases().iter().map(|&b| elements(b)).collect();
            assert_eq!(sorted_names(&m.circuits()), oracle_circuits(n, &bases));
        }
    }
}

#[test]
fn rank_of_set_agrees_with_maximal_independent_subsets() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=n);
        let m =
            SymplecticMatroid::bases_from_representation(&random_isotropic(&mut rng, FieldSpec::gf2(), n, k)).unwrap();
        for s in AdmissibleSet::all(n) {
            // largest subset of s contained in a basis
            let elems = elements(s);
            let best = (0u32..1 << elems.len())
                .filter(|mask| {
                    let sub: Vec<JElement> =
                        (0..elems.len()).filter(|j| mask >> j & 1 == 1).map(|j| elems[j]).collect();
                    m.bases().iter().any(|&b| sub.iter().all(|&e| b.contains(e)))
                })
                .map(|mask| mask.count_ones() as usize)
                .max()
                .unwrap();
            assert_eq!(m.rank_of_set(s), best);
        }
    }
}

#[test]
fn maximality_agrees_with_the_definition_on_arbitrary_collections() {
    let mut rng = StdRng::seed_from_u64(14);
    let (mut held, mut failed) = (0, 0);
    for _ in 0..150 {
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=n);
        let pool: Vec<AdmissibleSet> = AdmissibleSet::all_of_size(n, k).collect();
        let picks: Vec<AdmissibleSet> = pool.iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
        if picks.is_empty() {
            continue;
        }
        let m = SymplecticMatroid::new(n, picks).unwrap();
        let bases: Vec<Vec<JElement>> = m.bases().iter().map(|&b| elements(b)).collect();
        let expected = oracle_maximality(n, &bases);
        assert_eq!(m.check_maximality().unwrap(), expected, "{:?}", sorted_names(m.bases()));
        if expected {
            held += 1;
        } else {
            failed += 1;
        }
    }
    // both outcomes must actually be exercised
    assert!(held > 10 && failed > 10, "held {held}, failed {failed}");
}

#[test]
fn code_distance_agrees_with_full_enumeration() {
    let mut rng = StdRng::seed_from_u64(15);
    for (f, max_n) in [(FieldSpec::gf2(), 4), (FieldSpec::new(3).unwrap(), 3)] {
        for _ in 0..25 {
            let n = rng.gen_range(1..=max_n);
            let k = rng.gen_range(1..=n);
            let m = random_isotropic(&mut rng, f, n, k);
            let s = make_stabilizer(m.clone()).unwrap();
            assert_eq!(code_distance(&s, DEFAULT_ENUMERATION_CAP).unwrap(), oracle_distance(&m), "{f}\n{m}");
        }
    }
}

/// Interlace polynomial with the induced-subgraph rank taken from dense elimination.
fn dense_interlace(g: &WGraph) -> Vec<u64> {
    let f = FieldSpec::gf2();
    let a = g.adjacency(f).unwrap();
    let v = g.vertices();
    let mut coeffs = vec![0u64; v + 1];
    for s in 0u32..1 << v {
        let idx: Vec<usize> = (0..v).filter(|i| s >> i & 1 == 1).collect();
        let rank = if idx.is_empty() { 0 } else { a.select_rows(&idx).select_columns(&idx).unwrap().rank() };
        coeffs[idx.len() - rank] += 1;
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

#[test]
fn polynomials_agree_with_direct_sums() {
    let mut rng = StdRng::seed_from_u64(16);
    for _ in 0..25 {
        let v = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, v, 0.5);
        assert_eq!(interlace(&g).unwrap().coefficients(), dense_interlace(&g).as_slice());

        let m = lagrangian_from_graph(&g, FieldSpec::gf2()).unwrap();
        let mut tm = vec![0u64; v + 1];
        for s in oracle_admissible_sets(v).into_iter().filter(|s| s.len() == v) {
            let rk = m.bases().iter().map(|&b| s.iter().filter(|&&e| b.contains(e)).count()).max().unwrap();
            tm[v - rk] += 1;
        }
        while tm.last() == Some(&0) {
            tm.pop();
        }
        assert_eq!(restricted_tutte_martin(&m, DEFAULT_TERM_CAP).unwrap().coefficients(), tm.as_slice());
    }
}

/// Graphical independence with cycles found by bridge removal rather than leaf peeling.
fn graphical_independent(g: &WGraph, s: &[JElement], t_stars: &[bool], mode: StarMode) -> bool {
    let edges: Vec<(usize, usize, bool)> = s
        .iter()
        .map(|e| {
            let edge = g.edges()[e.index as usize - 1];
            let odd = match mode {
                StarMode::Within => e.starred,
                StarMode::Relative => e.starred != t_stars[e.index as usize - 1],
            };
            (edge.u, edge.v, odd)
        })
        .collect();
    let connected = |list: &[(usize, usize, bool)], a: usize, b: usize| {
        let mut seen = vec![a];
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for &(u, v, _) in list {
                for (p, q) in [(u, v), (v, u)] {
                    if p == x && !seen.contains(&q) {
                        seen.push(q);
                        stack.push(q);
                    }
                }
            }
        }
        seen.contains(&b)
    };
    // group edges into components
    let mut comps: Vec<Vec<(usize, usize, bool)>> = Vec::new();
    for &e in &edges {
        let hits: Vec<usize> = (0..comps.len())
            .filter(|&c| comps[c].iter().any(|&(u, v, _)| [u, v].contains(&e.0) || [u, v].contains(&e.1)))
            .collect();
        let mut merged = vec![e];
        for &c in hits.iter().rev() {
            merged.extend(comps.remove(c));
        }
        comps.push(merged);
    }
    comps.iter().all(|comp| {
        let mut verts: Vec<usize> = comp.iter().flat_map(|&(u, v, _)| [u, v]).collect();
        verts.sort();
        verts.dedup();
        if comp.len() < verts.len() {
            return true;
        }
        if comp.len() > verts.len() {
            return false;
        }
        // an edge is on the cycle iff its endpoints stay connected without it
        let stars = (0..comp.len())
            .filter(|&j| {
                let rest: Vec<_> = comp.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &e)| e).collect();
                comp[j].2 && connected(&rest, comp[j].0, comp[j].1)
            })
            .count();
        stars % 2 == 1
    })
}

#[test]
fn graphical_bases_agree_with_a_second_independence_test() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..25 {
        let v = rng.gen_range(2..=5);
        let g = random_graph(&mut rng, v, 0.6);
        let n = g.edges().len();
        if n == 0 {
            continue;
        }
        let t_stars: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let labels = (1..=n as u32).map(|i| JElement { index: i, starred: t_stars[i as usize - 1] }).collect();
        let lab = EdgeLabeling::new(labels).unwrap();
        for mode in [StarMode::Within, StarMode::Relative] {
            let m = graphical_symplectic_matroid(&g, &lab, mode).unwrap();
            let independent: Vec<Vec<JElement>> = oracle_admissible_sets(n)
                .into_iter()
                .filter(|s| graphical_independent(&g, s, &t_stars, mode))
                .collect();
            let top = independent.iter().map(Vec::len).max().unwrap();
            let mut expected: Vec<Vec<String>> = independent
                .iter()
                .filter(|s| s.len() == top)
                .map(|s| {
                    let mut s = s.clone();
                    s.sort();
                    s.iter().map(|e| e.to_string()).collect()
                })
                .collect();
            expected.sort();
            assert_eq!(sorted_names(m.bases()), expected);
        }
    }
}

#[test]
fn stabilizer_matrices_from_the_oracle_generator_are_isotropic() {
    let mut rng = StdRng::seed_from_u64(18);
    for _ in 0..20 {
        let m: FMatrix = random_isotropic(&mut rng, FieldSpec::new(5).unwrap(), 3, 2);
        assert!(symat::sympl::is_isotropic(&m).unwrap());
        assert_eq!(m.rank(), 2);
    }
}

#[test]
fn circuits_of_named_examples_agree_with_the_definition() {
    let f = FieldSpec::gf2();
    let k3 = lagrangian_from_graph(&WGraph::complete(3), f).unwrap();
    let sharing = FMatrix::from_rows(
        f,
        &[
            [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0],
            [0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0],
            [0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1],
            [0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1],
        ],
    )
    .unwrap();
    let sharing = SymplecticMatroid::bases_from_representation(&sharing).unwrap();
    for (m, count) in [(k3, 4), (sharing, 17)] {
        let bases: Vec<Vec<JElement>> = m.bases().iter().map(|&b| elements(b)).collect();
        let expected = oracle_circuits(m.n(), &bases);
        assert_eq!(expected.len(), count);
        assert_eq!(sorted_names(&m.circuits()), expected);
    }
}
