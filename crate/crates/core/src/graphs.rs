//! Weighted simple graphs, graph-state stabilizers and graphical symplectic matroids.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::ffmat::{FMatrix, FieldSpec};
use crate::smatroid::{deposit, support_masks, AdmissibleSet, JElement, MatroidError, SymplecticMatroid};
use crate::sympl::{make_stabilizer, StabilizerMatrix, SymplError};
use crate::text::{self, ParseError};

/// Largest edge count accepted by [`graphical_symplectic_matroid`].
pub const MAX_GRAPHICAL_EDGES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("SelfLoop: edge {0} {0}")]
    SelfLoop(usize),
    #[error("DuplicateEdge: {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("VertexOutOfRange: vertex {vertex} in a graph on {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },
    #[error("ZeroWeight: edge {0} {1}")]
    ZeroWeight(usize, usize),
    #[error("WeightNotInField: weight {weight} on edge {u} {v} is not a nonzero residue mod {p}")]
    WeightNotInField { u: usize, v: usize, weight: u32, p: u32 },
    #[error("BadLabeling: {0}")]
    BadLabeling(String),
    #[error("TooManyEdges: {edges} edges exceed {max}")]
    TooManyEdges { edges: usize, max: usize },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Representation(#[from] SymplError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    /// 1-based endpoints with `u < v`
    pub u: usize,
    pub v: usize,
    pub weight: u32,
}

/// A simple graph on vertices `1..=vertices` with nonzero integer edge weights.
///
/// Edge order is significant: edge `j` carries ground element `j` of the
/// graphical matroid unless a labeling says otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WGraph {
    vertices: usize,
    edges: Vec<Edge>,
}

impl WGraph {
    pub fn new(vertices: usize, edges: &[(usize, usize, u32)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(vertices);
        for &(u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn unweighted(vertices: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let weighted: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Self::new(vertices, &weighted)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, weight: u32) -> Result<(), GraphError> {
        for x in [u, v] {
            if x == 0 || x > self.vertices {
                return Err(GraphError::VertexOutOfRange { vertex: x, vertices: self.vertices });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if weight == 0 {
            return Err(GraphError::ZeroWeight(u, v));
        }
        let (u, v) = (u.min(v), u.max(v));
        if self.edges.iter().any(|e| e.u == u && e.v == v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.edges.push(Edge { u, v, weight });
        Ok(())
    }

    pub fn empty(vertices: usize) -> Self {
        Self { vertices, edges: Vec::new() }
    }

    pub fn path(vertices: usize) -> Self {
        let edges: Vec<_> = (1..vertices).map(|i| (i, i + 1)).collect();
        Self::unweighted(vertices, &edges).expect("path edges are simple")
    }

    pub fn cycle(vertices: usize) -> Self {
        assert!(vertices >= 3, "a simple cycle needs three vertices");
        let edges: Vec<_> = (1..=vertices).map(|i| (i, i % vertices + 1)).collect();
        Self::unweighted(vertices, &edges).expect("cycle edges are simple")
    }

    pub fn complete(vertices: usize) -> Self {
        let edges: Vec<_> = (1..=vertices).flat_map(|u| (u + 1..=vertices).map(move |v| (u, v))).collect();
        Self::unweighted(vertices, &edges).expect("complete graph edges are simple")
    }

    /// Outer 5-cycle `1..5`, inner pentagram `6..10`, spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i + 1, (i + 1) % 5 + 1));
            edges.push((i + 6, (i + 2) % 5 + 6));
            edges.push((i + 1, i + 6));
        }
        Self::unweighted(10, &edges).expect("Petersen edges are simple")
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.u == v {
                Some(e.v)
            } else if e.v == v {
                Some(e.u)
            } else {
                None
            }
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// `None` on a graph without vertices.
    pub fn min_degree(&self) -> Option<usize> {
        (1..=self.vertices).map(|v| self.degree(v)).min()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let adj = self.adjacency_lists();
        let mut best: Option<usize> = None;
        for root in 0..self.vertices {
            let mut dist = vec![usize::MAX; self.vertices];
            let mut parent = vec![usize::MAX; self.vertices];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Whether every weight is 1, the only nonzero residue in GF(2).
    pub fn is_binary(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1)
    }

    /// Symmetric weighted adjacency matrix with zero diagonal.
    pub fn adjacency(&self, field: FieldSpec) -> Result<FMatrix, GraphError> {
        let mut a = FMatrix::zeros(field, self.vertices, self.vertices);
        for e in &self.edges {
            if e.weight >= field.p() {
                return Err(GraphError::WeightNotInField { u: e.u, v: e.v, weight: e.weight, p: field.p() });
            }
            a.set(e.u - 1, e.v - 1, e.weight);
            a.set(e.v - 1, e.u - 1, e.weight);
        }
        Ok(a)
    }

    /// Rows of the GF(2) adjacency matrix as bit masks.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        let mut rows = vec![0u64; self.vertices];
        for e in &self.edges {
            rows[e.u - 1] |= 1 << (e.v - 1);
            rows[e.v - 1] |= 1 << (e.u - 1);
        }
        rows
    }

    /// Same graph with vertex `v` renamed `perm[v-1]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let edges: Vec<_> = self.edges.iter().map(|e| (perm[e.u - 1], perm[e.v - 1], e.weight)).collect();
        Self::new(self.vertices, &edges)
    }

    fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for e in &self.edges {
            adj[e.u - 1].push(e.v - 1);
            adj[e.v - 1].push(e.u - 1);
        }
        adj
    }
}

/// `[I | A]` with `A` the weighted adjacency matrix.
pub fn graph_state_stabilizer(g: &WGraph, field: FieldSpec) -> Result<StabilizerMatrix, GraphError> {
    let a = g.adjacency(field)?;
    let m = FMatrix::identity(field, g.vertices()).hstack(&a).map_err(SymplError::from)?;
    Ok(make_stabilizer(m)?)
}

/// The Lagrangian matroid represented by the graph state of `g`.
pub fn lagrangian_from_graph(g: &WGraph, field: FieldSpec) -> Result<SymplecticMatroid, GraphError> {
    Ok(SymplecticMatroid::from_stabilizer(&graph_state_stabilizer(g, field)?)?)
}

/// Assignment of a transversal element to each edge, in edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: Vec<JElement>,
}

impl EdgeLabeling {
    /// The labels must use each index `1..=labels.len()` exactly once.
    pub fn new(labels: Vec<JElement>) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut seen = vec![false; n];
        for e in &labels {
            let i = e.index as usize;
            if i == 0 || i > n || seen[i - 1] {
                let shown: Vec<String> = labels.iter().map(|e| e.to_string()).collect();
                return Err(GraphError::BadLabeling(format!("{} is not a transversal of [{n}]", shown.join(" "))));
            }
            seen[i - 1] = true;
        }
        Ok(Self { labels })
    }

    /// Edge `j` labeled by the unstarred element `j`.
    pub fn identity(edges: usize) -> Self {
        Self { labels: (1..=edges as u32).map(JElement::plain).collect() }
    }

    pub fn labels(&self) -> &[JElement] {
        &self.labels
    }

    /// The transversal `T` as a set.
    pub fn transversal(&self) -> AdmissibleSet {
        AdmissibleSet::from_elements(self.labels.iter().copied()).expect("labels form a transversal")
    }
}

/// How the star count on a cycle is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StarMode {
    /// Count the starred elements of the candidate set itself.
    #[default]
    Within,
    /// Count elements whose sign differs from the labeling transversal.
    Relative,
}

impl FromStr for StarMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "within" | "within-set" => Ok(Self::Within),
            "relative" | "relative-to-T" => Ok(Self::Relative),
            other => Err(format!("unknown star mode `{other}`")),
        }
    }
}

impl fmt::Display for StarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Within => "within",
            Self::Relative => "relative",
        })
    }
}

/// Cycle structure of an edge subset, in ground-index masks.
enum SupportShape {
    /// some component has more edges than vertices
    Dependent,
    /// one mask per unicyclic component
    Cycles(Vec<u32>),
}

struct GraphicalContext {
    /// endpoints (0-based) of the edge carrying ground index `i+1`
    edge_of_index: Vec<(usize, usize)>,
    vertices: usize,
    /// ground indices whose label is starred
    t_stars: u32,
}

impl GraphicalContext {
    fn shape(&self, support: u32) -> SupportShape {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let indices: Vec<usize> = (0..32).filter(|i| support >> i & 1 == 1).collect();
        for &i in &indices {
            let (u, v) = self.edge_of_index[i];
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
        let mut touched = vec![false; self.vertices];
        let mut edges_in = vec![0usize; self.vertices];
        let mut verts_in = vec![0usize; self.vertices];
        for &i in &indices {
            let (u, v) = self.edge_of_index[i];
            touched[u] = true;
            touched[v] = true;
            let r = find(&mut parent, u);
            edges_in[r] += 1;
        }
        for x in (0..self.vertices).filter(|&x| touched[x]) {
            let r = find(&mut parent, x);
            verts_in[r] += 1;
        }
        let mut unicyclic_roots = Vec::new();
        for r in 0..self.vertices {
            if edges_in[r] > verts_in[r] {
                return SupportShape::Dependent;
            }
            if edges_in[r] > 0 && edges_in[r] == verts_in[r] {
                unicyclic_roots.push(r);
            }
        }
        if unicyclic_roots.is_empty() {
            return SupportShape::Cycles(Vec::new());
        }
        // peel leaves; what survives is the union of the cycles
        let mut remaining = support;
        let mut degree = vec![0usize; self.vertices];
        for &i in &indices {
            let (u, v) = self.edge_of_index[i];
            degree[u] += 1;
            degree[v] += 1;
        }
        loop {
            let leaf_edge = indices.iter().copied().find(|&i| {
                let (u, v) = self.edge_of_index[i];
                remaining >> i & 1 == 1 && (degree[u] == 1 || degree[v] == 1)
            });
            let Some(i) = leaf_edge else { break };
            remaining &= !(1 << i);
            let (u, v) = self.edge_of_index[i];
            degree[u] -= 1;
            degree[v] -= 1;
        }
        let cycles = unicyclic_roots
            .into_iter()
            .map(|r| {
                indices
                    .iter()
                    .filter(|&&i| remaining >> i & 1 == 1 && find(&mut parent, self.edge_of_index[i].0) == r)
                    .fold(0u32, |m, &i| m | 1 << i)
            })
            .collect();
        SupportShape::Cycles(cycles)
    }
}

/// Bases of the graphical symplectic matroid of `g` under `labeling`.
///
/// An admissible set is independent when every component of its edge
/// subgraph is a tree, or has exactly one cycle and that cycle carries an odd
/// number of stars (counted per `mode`). The bases are the independent sets
/// of maximum size.
pub fn graphical_symplectic_matroid(
    g: &WGraph,
    labeling: &EdgeLabeling,
    mode: StarMode,
) -> Result<SymplecticMatroid, GraphError> {
    let n = g.edges().len();
    if n > MAX_GRAPHICAL_EDGES {
        return Err(GraphError::TooManyEdges { edges: n, max: MAX_GRAPHICAL_EDGES });
    }
    if labeling.labels().len() != n {
        return Err(GraphError::BadLabeling(format!("{} labels for {n} edges", labeling.labels().len())));
    }
    let mut edge_of_index = vec![(0, 0); n];
    let mut t_stars = 0u32;
    for (edge, label) in g.edges().iter().zip(labeling.labels()) {
        let i = label.index as usize - 1;
        edge_of_index[i] = (edge.u - 1, edge.v - 1);
        if label.starred {
            t_stars |= 1 << i;
        }
    }
    let ctx = GraphicalContext { edge_of_index, vertices: g.vertices(), t_stars };
    let top = n.min(g.vertices());
    for k in (0..=top).rev() {
        let supports: Vec<u32> = support_masks(n, k).collect();
        let bases: Vec<AdmissibleSet> = supports
            .par_iter()
            .flat_map_iter(|&support| {
                let cycles = match ctx.shape(support) {
                    SupportShape::Dependent => Vec::new(),
                    SupportShape::Cycles(c) => vec![c],
                };
                let ctx = &ctx;
                cycles.into_iter().flat_map(move |cycles| {
                    (0..1u32 << k).filter_map(move |signs| {
                        let starred = deposit(signs, support);
                        let odd = match mode {
                            StarMode::Within => starred,
                            StarMode::Relative => starred ^ (ctx.t_stars & support),
                        };
                        cycles
                            .iter()
                            .all(|c| (odd & c).count_ones() % 2 == 1)
                            .then(|| AdmissibleSet::signed(support, starred))
                    })
                })
            })
            .collect();
        if !bases.is_empty() {
            return Ok(SymplecticMatroid::new(n, bases)?);
        }
    }
    unreachable!("the empty set is always independent")
}

/// Sum over components of `vertices - 1`, plus one for each component that
/// contains a cycle.
pub fn expected_graphical_rank(g: &WGraph) -> usize {
    let adj = g.adjacency_lists();
    let mut seen = vec![false; g.vertices()];
    let mut rank = 0;
    for root in 0..g.vertices() {
        if seen[root] {
            continue;
        }
        let mut stack = vec![root];
        seen[root] = true;
        let (mut verts, mut degree_sum) = (0usize, 0usize);
        while let Some(x) = stack.pop() {
            verts += 1;
            degree_sum += adj[x].len();
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        let edges = degree_sum / 2;
        rank += verts - 1 + usize::from(edges >= verts);
    }
    rank
}

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: WGraph,
    /// Present when every edge carries a `label=` attribute.
    pub labels: Option<Vec<JElement>>,
}

impl GraphFile {
    /// The file's labeling, or edge `j` labeled `j` when there is none.
    pub fn labeling(&self) -> Result<EdgeLabeling, GraphError> {
        match &self.labels {
            Some(l) => EdgeLabeling::new(l.clone()),
            None => Ok(EdgeLabeling::identity(self.graph.edges().len())),
        }
    }
}

/// Parses `graph <V>` followed by `edge <u> <v> [weight=<w>] [label=<i|i*>]` lines.
pub fn parse_graph(input: &str) -> Result<GraphFile, ParseError> {
    let mut lines = text::lines(input);
    let first = lines.next().ok_or_else(|| ParseError::new(0, "missing `graph <V>` line"))?;
    if first.keyword() != "graph" {
        return Err(first.error(format!("expected `graph`, found `{}`", first.keyword())));
    }
    first.expect_arity(1)?;
    let mut graph = WGraph::empty(first.parse_usize(1)?);
    let mut labels: Vec<Option<JElement>> = Vec::new();
    for line in lines {
        if line.keyword() != "edge" {
            return Err(line.error(format!("expected `edge`, found `{}`", line.keyword())));
        }
        if line.tokens.len() < 3 || line.tokens.len() > 5 {
            return Err(line.error("expected `edge <u> <v> [weight=<w>] [label=<i|i*>]`"));
        }
        let (u, v) = (line.parse_usize(1)?, line.parse_usize(2)?);
        let mut weight = 1u32;
        let mut label = None;
        for tok in &line.tokens[3..] {
            if let Some(w) = tok.strip_prefix("weight=") {
                weight = w.parse().map_err(|_| line.error(format!("bad weight `{w}`")))?;
            } else if let Some(l) = tok.strip_prefix("label=") {
                label = Some(l.parse::<JElement>().map_err(|e| line.error(e.to_string()))?);
            } else {
                return Err(line.error(format!("unknown edge attribute `{tok}`")));
            }
        }
        graph.add_edge(u, v, weight).map_err(|e| line.error(e.to_string()))?;
        labels.push(label);
    }
    let labels = if labels.iter().all(Option::is_none) {
        None
    } else if labels.iter().all(Option::is_some) {
        Some(labels.into_iter().flatten().collect())
    } else {
        return Err(ParseError::new(first.number, "either every edge has a label or none does"));
    };
    Ok(GraphFile { graph, labels })
}

/// Renders a graph in the format read by [`parse_graph`].
pub fn write_graph(g: &WGraph, labeling: Option<&EdgeLabeling>) -> String {
    let mut out = format!("graph {}\n", g.vertices());
    for (j, e) in g.edges().iter().enumerate() {
        out.push_str(&format!("edge {} {}", e.u, e.v));
        if e.weight != 1 {
            out.push_str(&format!(" weight={}", e.weight));
        }
        if let Some(l) = labeling {
            out.push_str(&format!(" label={}", l.labels()[j]));
        }
        out.push('\n');
    }
    out
}
