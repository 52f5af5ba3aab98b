//! Random instance generators and brute-force oracles shared by the test suites.
//!
//! The oracles deliberately avoid the library's own elimination, enumeration
//! and ordering code so that agreement is evidence rather than tautology.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use symat::ffmat::{FMatrix, FieldSpec, Residue};
use symat::graphs::WGraph;
use symat::smatroid::{AdmissibleSet, JElement};
use symat::sympl::{build_css, symplectic_complement, StabilizerMatrix};

pub fn random_combination(rng: &mut StdRng, basis: &FMatrix) -> Vec<Residue> {
    let f = basis.field();
    let mut v = vec![0; basis.cols()];
    for row in basis.row_iter() {
        let c = rng.gen_range(0..f.p());
        for (x, &r) in v.iter_mut().zip(row) {
            *x = f.add(*x, f.mul(c, r));
        }
    }
    v
}

fn to_rows(rows: &[Vec<Residue>]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
}

/// `k` independent rows spanning an isotropic subspace of GF(p)^{2n}.
pub fn random_isotropic(rng: &mut StdRng, field: FieldSpec, n: usize, k: usize) -> FMatrix {
    assert!(k <= n);
    let mut rows: Vec<Vec<Residue>> = Vec::new();
    while rows.len() < k {
        let current = FMatrix::from_rows_with_cols(field, 2 * n, &to_rows(&rows)).unwrap();
        let room =
            if rows.is_empty() { FMatrix::identity(field, 2 * n) } else { symplectic_complement(&current).unwrap() };
        let v = random_combination(rng, &room);
        let mut extended = rows.clone();
        extended.push(v);
        let candidate = FMatrix::from_rows_with_cols(field, 2 * n, &to_rows(&extended)).unwrap();
        if candidate.rank() == extended.len() {
            rows = extended;
        }
    }
    FMatrix::from_rows_with_cols(field, 2 * n, &to_rows(&rows)).unwrap()
}

/// Independent rows of a random subspace of GF(p)^cols drawn from `room`.
fn random_subspace(rng: &mut StdRng, room: &FMatrix, draws: usize) -> FMatrix {
    let f = room.field();
    let rows: Vec<Vec<Residue>> = (0..draws).map(|_| random_combination(rng, room)).collect();
    let m = FMatrix::from_rows_with_cols(f, room.cols(), &to_rows(&rows)).unwrap();
    m.echelon().basis()
}

/// A CSS code `[X 0; 0 Z]` with `X Z^t = 0` and at least one generator.
pub fn random_css(rng: &mut StdRng, field: FieldSpec, n: usize) -> StabilizerMatrix {
    loop {
        let draws = rng.gen_range(0..=n);
        let x = random_subspace(rng, &FMatrix::identity(field, n), draws);
        let kernel = if x.rows() == 0 { FMatrix::identity(field, n) } else { x.nullspace() };
        let draws = rng.gen_range(0..=n);
        let z = random_subspace(rng, &kernel, draws);
        if x.rows() + z.rows() == 0 {
            continue;
        }
        let x = if x.rows() == 0 { FMatrix::zeros(field, 0, n) } else { x };
        let z = if z.rows() == 0 { FMatrix::zeros(field, 0, n) } else { z };
        return build_css(&x, &z).unwrap();
    }
}

pub fn random_graph(rng: &mut StdRng, vertices: usize, density: f64) -> WGraph {
    let mut edges = Vec::new();
    for u in 1..=vertices {
        for v in u + 1..=vertices {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    WGraph::unweighted(vertices, &edges).unwrap()
}

/// Determinant over GF(p) by cofactor expansion.
pub fn det_by_cofactors(m: &[Vec<Residue>], p: u32) -> Residue {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let p = p as u64;
    let mut total = 0u64;
    for c in 0..k {
        let minor: Vec<Vec<Residue>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
            .collect();
        let term = m[0][c] as u64 * det_by_cofactors(&minor, p as u32) as u64 % p;
        total = if c % 2 == 0 { (total + term) % p } else { (total + p - term) % p };
    }
    total as Residue
}

/// Bases as sorted element-name lists, from cofactor determinants over all
/// subsets of J of the right size that never pick both `i` and `i*`.
pub fn oracle_bases(m: &FMatrix) -> Vec<Vec<String>> {
    let n = m.cols() / 2;
    let k = m.rows();
    let mut out = Vec::new();
    // walk every subset of the 2n columns
    for mask in 0u64..1 << (2 * n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let cols: Vec<usize> = (0..2 * n).filter(|c| mask >> c & 1 == 1).collect();
        if cols.iter().any(|&c| c < n && cols.contains(&(c + n))) {
            continue;
        }
        let sub: Vec<Vec<Residue>> = m.row_iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
        if det_by_cofactors(&sub, m.field().p()) != 0 {
            let mut names: Vec<String> =
                cols.iter().map(|&c| if c < n { format!("{}", c + 1) } else { format!("{}*", c - n + 1) }).collect();
            names.sort_by_key(|s| (s.trim_end_matches('*').parse::<u32>().unwrap(), s.ends_with('*')));
            out.push(names);
        }
    }
    out.sort();
    out
}

pub fn names(s: AdmissibleSet) -> Vec<String> {
    s.elements().map(|e| e.to_string()).collect()
}

pub fn sorted_names<'a>(sets: impl IntoIterator<Item = &'a AdmissibleSet>) -> Vec<Vec<String>> {
    let mut v: Vec<_> = sets.into_iter().map(|&s| names(s)).collect();
    v.sort();
    v
}

/// Every admissible subset of J for ground size `n`, as element lists.
pub fn oracle_admissible_sets(n: usize) -> Vec<Vec<JElement>> {
    let mut out = vec![Vec::new()];
    for i in 1..=n as u32 {
        let mut next = Vec::new();
        for s in &out {
            next.push(s.clone());
            let mut a = s.clone();
            a.push(JElement::plain(i));
            next.push(a);
            let mut b = s.clone();
            b.push(JElement::starred(i));
            next.push(b);
        }
        out = next;
    }
    out
}

/// Minimal admissible sets not contained in any basis, straight from the definition.
pub fn oracle_circuits(n: usize, bases: &[Vec<JElement>]) -> Vec<Vec<String>> {
    let in_basis = |s: &[JElement]| bases.iter().any(|b| s.iter().all(|e| b.contains(e)));
    let mut out = Vec::new();
    for s in oracle_admissible_sets(n) {
        if s.is_empty() || in_basis(&s) {
            continue;
        }
        let minimal = (0..s.len()).all(|skip| {
            let t: Vec<JElement> = s.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &e)| e).collect();
            in_basis(&t)
        });
        if minimal {
            let mut v: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            v.sort_by_key(|s| (s.trim_end_matches('*').parse::<u32>().unwrap(), s.ends_with('*')));
            out.push(v);
        }
    }
    out.sort();
    out
}

/// Every signed permutation as the list of elements from largest to smallest.
pub fn oracle_orderings(n: usize) -> Vec<Vec<JElement>> {
    fn perms(items: Vec<u32>) -> Vec<Vec<u32>> {
        if items.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (i, &x) in items.iter().enumerate() {
            let mut rest = items.clone();
            rest.remove(i);
            for mut p in perms(rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
    let mut out = Vec::new();
    for p in perms((1..=n as u32).collect()) {
        for signs in 0..1u32 << n {
            let top: Vec<JElement> =
                p.iter().enumerate().map(|(j, &i)| JElement { index: i, starred: signs >> j & 1 == 1 }).collect();
            let mut chain = top.clone();
            chain.extend(top.iter().rev().map(|e| e.star()));
            out.push(chain);
        }
    }
    out
}

/// Maximality from the definition: under every ordering some basis dominates all others slotwise.
pub fn oracle_maximality(n: usize, bases: &[Vec<JElement>]) -> bool {
    oracle_orderings(n).iter().all(|chain| {
        let height = |e: &JElement| chain.len() - chain.iter().position(|x| x == e).unwrap();
        let sorted: Vec<Vec<usize>> = bases
            .iter()
            .map(|b| {
                let mut h: Vec<usize> = b.iter().map(height).collect();
                h.sort();
                h
            })
            .collect();
        sorted.iter().any(|top| sorted.iter().all(|other| other.iter().zip(top).all(|(a, b)| a <= b)))
    })
}

pub fn elements(s: AdmissibleSet) -> Vec<JElement> {
    s.elements().collect()
}

/// Minimum symplectic weight by walking all of GF(p)^{2n}: over the nonzero
/// stabilizer when it is Lagrangian, else over the normalizer minus the stabilizer.
pub fn oracle_distance(gens: &FMatrix) -> Option<usize> {
    let f = gens.field();
    let p = f.p() as u64;
    let two_n = gens.cols();
    let n = two_n / 2;
    let k = gens.rows();
    let total = p.pow(two_n as u32);
    let vector = |mut idx: u64| -> Vec<Residue> {
        (0..two_n)
            .map(|_| {
                let d = (idx % p) as Residue;
                idx /= p;
                d
            })
            .collect()
    };
    let span: std::collections::HashSet<Vec<Residue>> = (0..p.pow(k as u32))
        .map(|mut idx| {
            let mut v = vec![0; two_n];
            for row in gens.row_iter() {
                let c = (idx % p) as Residue;
                idx /= p;
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(c, r));
                }
            }
            v
        })
        .collect();
    let commutes = |v: &[Residue]| {
        gens.row_iter().all(|g| {
            let mut s = 0u64;
            for i in 0..n {
                s += v[i] as u64 * g[n + i] as u64 + (p - 1) * (g[i] as u64 * v[n + i] as u64 % p);
            }
            s.is_multiple_of(p)
        })
    };
    let weight = |v: &[Residue]| (0..n).filter(|&i| v[i] != 0 || v[n + i] != 0).count();
    let lagrangian = k == n;
    (1..total)
        .map(vector)
        .filter(|v| if lagrangian { span.contains(v) } else { commutes(v) && !span.contains(v) })
        .map(|v| weight(&v))
        .min()
}
