//! Simple graphs on `{1..n}`, the ideals `I_G = ⋂ P_ij` and their symbolic
//! powers, and the purely combinatorial predicates that decide
//! Cohen-Macaulayness and power equality for them.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{AmbientContext, Monomial, MonomialIdeal, MAX_VARS};
use crate::simplicial::{DegreeVector, Face, SimplicialComplex};

/// A simple graph with no loops and no isolated vertices, `n >= 3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u32>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if !(3..=MAX_VARS).contains(&n) {
            return Err(Error::InvalidGraph(format!(
                "vertex count must be between 3 and {MAX_VARS}, got {n}"
            )));
        }
        let mut adj = vec![0u32; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u},{v}}} has a vertex outside 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            let (a, b) = (u.min(v), u.max(v));
            if adj[a - 1] & (1 << (b - 1)) != 0 {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{a},{b}}}")));
            }
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
            list.push((a, b));
        }
        if let Some(v) = (1..=n).find(|&v| adj[v - 1] == 0) {
            return Err(Error::InvalidGraph(format!("vertex {v} is isolated")));
        }
        list.sort_unstable();
        Ok(Self {
            n,
            edges: list,
            adj,
        })
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| (i, j))))
    }

    /// Edge `k` of the mask is the `k`-th pair in the order
    /// `{1,2}, {1,3}, ..., {1,n}, {2,3}, ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        let pairs = edge_pairs(n);
        if pairs.len() < 64 && mask >> pairs.len() != 0 {
            return Err(Error::InvalidGraph(format!(
                "mask {mask:#x} has bits beyond the {} pairs of {n} vertices",
                pairs.len()
            )));
        }
        Self::new(
            n,
            pairs
                .into_iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, p)| p),
        )
    }

    /// Inverse of [`Graph::from_edge_mask`]; `None` when `n > 11`.
    pub fn edge_mask(&self) -> Option<u64> {
        if self.n > 11 {
            return None;
        }
        let pairs = edge_pairs(self.n);
        Some(
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| self.has_edge(a, b))
                .fold(0u64, |m, (k, _)| m | (1 << k)),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u - 1] & (1 << (v - 1)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn ambient(&self) -> AmbientContext {
        AmbientContext::with_vars(self.n).expect("graph size already validated")
    }

    /// Relabels vertex `v` as `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        Graph::new(
            self.n,
            self.edges.iter().map(|&(a, b)| (perm[a - 1], perm[b - 1])),
        )
    }

    fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s - 1] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let d = dist[u - 1].expect("queued vertices have a distance");
            for v in 1..=self.n {
                if self.has_edge(u, v) && dist[v - 1].is_none() {
                    dist[v - 1] = Some(d + 1);
                    q.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(1).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 1..=self.n {
            for d in self.distances_from(s) {
                match d {
                    None => return Diameter::Infinite,
                    Some(d) => best = best.max(d),
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Whether each pair of vertex-disjoint edges lies on a common 4-cycle.
    pub fn disjoint_pairs_in_4cycles(&self) -> bool {
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            for &(c, d) in &self.edges[k + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let straight = self.has_edge(a, c) && self.has_edge(b, d);
                let crossed = self.has_edge(a, d) && self.has_edge(b, c);
                if !straight && !crossed {
                    return false;
                }
            }
        }
        true
    }

    pub fn classify(&self) -> GraphClass {
        classify_edges(&self.edges).0
    }

    /// Non-edges of the graph. The result may have isolated vertices, so it
    /// is a bare edge list rather than a [`Graph`].
    pub fn complement(&self) -> Vec<(usize, usize)> {
        edge_pairs(self.n)
            .into_iter()
            .filter(|&(a, b)| !self.has_edge(a, b))
            .collect()
    }

    /// Vertex triples that are pairwise adjacent.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            for c in (b + 1)..=self.n {
                if self.has_edge(a, c) && self.has_edge(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    /// Text format: `n <count>` followed by one `u v` edge per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (a, b) in &self.edges {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let parse = |t: &str| {
                t.parse::<usize>().map_err(|e| Error::Parse {
                    line: line_no,
                    msg: format!("`{t}`: {e}"),
                })
            };
            match n {
                None => {
                    if toks.len() != 2 || toks[0] != "n" {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "expected header `n <count>`".into(),
                        });
                    }
                    n = Some(parse(toks[1])?);
                }
                Some(_) => {
                    if toks.len() != 2 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "expected an edge `u v`".into(),
                        });
                    }
                    edges.push((parse(toks[0])?, parse(toks[1])?));
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 1,
            msg: "missing header `n <count>`".into(),
        })?;
        Graph::new(n, edges)
    }
}

/// All pairs `{i,j}`, `i < j`, in mask order.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
        .collect()
}

/// Graph diameter; disconnected graphs have infinite diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_most(self, d: usize) -> bool {
        matches!(self, Diameter::Finite(x) if x <= d)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GraphClass {
    Path,
    Cycle,
    TwoDisjointEdges,
    Other,
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::Path => "path",
            GraphClass::Cycle => "cycle",
            GraphClass::TwoDisjointEdges => "two-disjoint-edges",
            GraphClass::Other => "other",
        })
    }
}

/// Classifies an edge list on the vertices it touches; also returns the
/// number of those vertices.
pub fn classify_edges(edges: &[(usize, usize)]) -> (GraphClass, usize) {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let nv = verts.len();
    let ne = edges.len();
    if ne == 0 {
        return (GraphClass::Other, 0);
    }
    if ne == 2 && nv == 4 {
        return (GraphClass::TwoDisjointEdges, nv);
    }
    let deg = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    // union-find over touched vertices
    let mut parent: Vec<usize> = (0..nv).collect();
    let idx = |v: usize| verts.binary_search(&v).expect("touched vertex");
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    let connected = (0..nv).all(|i| find(&mut parent, i) == root);
    if !connected {
        return (GraphClass::Other, nv);
    }
    let max_deg = verts.iter().map(|&v| deg(v)).max().unwrap_or(0);
    if ne + 1 == nv && max_deg <= 2 {
        (GraphClass::Path, nv)
    } else if verts.iter().all(|&v| deg(v) == 2) {
        (GraphClass::Cycle, nv)
    } else {
        (GraphClass::Other, nv)
    }
}

/// Two-colourability of an edge list over vertices `1..=n`.
pub fn is_bipartite(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut colour: Vec<Option<bool>> = vec![None; n + 1];
    for s in 1..=n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let cu = colour[u].expect("queued vertices are coloured");
            for &(a, b) in edges {
                let v = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        q.push_back(v);
                    }
                    Some(cv) if cv == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// `P_ij^m`, generated by the degree-`m` monomials in the variables other
/// than `x_i, x_j`.
pub fn edge_prime_power(g: &Graph, (i, j): (usize, usize), m: u32) -> MonomialIdeal {
    let vars: Vec<usize> = (1..=g.n()).filter(|&t| t != i && t != j).collect();
    MonomialIdeal::prime_power(g.ambient(), &vars, m).expect("n >= 3 leaves a variable")
}

/// `I_G = ⋂_{ij ∈ G} P_ij`.
pub fn ideal_of_graph(g: &Graph) -> MonomialIdeal {
    symbolic_power(g, 1)
}

/// `I_G` from its generator description: `x_i x_j` for every non-edge and
/// `x_i x_j x_k` for every triangle.
pub fn ideal_of_graph_direct(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    let gens = g
        .complement()
        .into_iter()
        .map(|(a, b)| Monomial::squarefree(n, &[a, b]))
        .chain(
            g.triangles()
                .into_iter()
                .map(|t| Monomial::squarefree(n, &t)),
        );
    MonomialIdeal::minimalize(g.ambient(), gens).expect("lengths match")
}

/// `I_G^(m) = ⋂_{ij ∈ G} P_ij^m`, intersected left to right over the sorted
/// edge list.
pub fn symbolic_power(g: &Graph, m: u32) -> MonomialIdeal {
    let mut acc = MonomialIdeal::unit(g.ambient());
    for &e in g.edges() {
        acc = acc
            .intersect(&edge_prime_power(g, e, m))
            .expect("same ambient");
    }
    acc
}

/// `I_G^m`.
pub fn ordinary_power(g: &Graph, m: u32) -> MonomialIdeal {
    ideal_of_graph(g).power(m)
}

/// Membership in `I_G^(m)` without generators: for every edge `{i,j}` the
/// degree of `f` outside `{i,j}` is at least `m`.
pub fn in_symbolic_power(g: &Graph, m: u32, f: &Monomial) -> bool {
    let e = f.exponents();
    let total: u32 = e.iter().sum();
    g.edges()
        .iter()
        .all(|&(i, j)| total - e[i - 1] - e[j - 1] >= m)
}

/// `Δ_a(I_G^(m))` for `a ∈ N^n`: the edges `{i,j}` of `G` with
/// `sum_{t ≠ i,j} a_t < m`.
pub fn delta_a_closed_form(g: &Graph, m: u32, a: &DegreeVector) -> Result<SimplicialComplex> {
    if let Some(i) = a.coords().iter().position(|&c| c < 0) {
        return Err(Error::NegativeCoordinate(i + 1));
    }
    if a.n() != g.n() {
        return Err(Error::AmbientMismatch {
            expected: g.n(),
            found: a.n(),
        });
    }
    let c = a.coords();
    let total: i64 = c.iter().sum();
    let edges = g
        .edges()
        .iter()
        .filter(|&&(i, j)| total - c[i - 1] - c[j - 1] < i64::from(m))
        .map(|&(i, j)| Face::from_vertices(&[i, j]));
    Ok(SimplicialComplex::from_faces(g.n(), edges))
}

/// The six combinatorial predictions for `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Criteria {
    /// `I^(2)` is Cohen-Macaulay: `diam(G) <= 2`.
    pub cm_sym2: bool,
    /// `I^(m)`, `m >= 3`, is Cohen-Macaulay: disjoint edge pairs lie on 4-cycles.
    pub cm_sym_high: bool,
    /// `I^(2) = I^2`.
    pub eq2: bool,
    /// `I^(m) = I^m` for `m >= 3`.
    pub eq_high: bool,
    /// `I^2` is Cohen-Macaulay.
    pub cm_ord2: bool,
    /// `I^m`, `m >= 3`, is Cohen-Macaulay.
    pub cm_ord_high: bool,
}

impl Criteria {
    pub fn cm_symbolic(&self, m: u32) -> bool {
        if m == 2 {
            self.cm_sym2
        } else {
            self.cm_sym_high
        }
    }

    pub fn powers_equal(&self, m: u32) -> bool {
        if m == 2 {
            self.eq2
        } else {
            self.eq_high
        }
    }

    pub fn cm_ordinary(&self, m: u32) -> bool {
        if m == 2 {
            self.cm_ord2
        } else {
            self.cm_ord_high
        }
    }
}

/// Evaluates every prediction from the graph alone. `m` only selects which
/// regime the caller is in and must be at least 2.
pub fn criteria(g: &Graph, m: u32) -> Result<Criteria> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("criteria need m >= 2, got {m}")));
    }
    let n = g.n();
    let class = g.classify();
    let special = matches!(
        class,
        GraphClass::Path | GraphClass::Cycle | GraphClass::TwoDisjointEdges
    );
    let cycle = class == GraphClass::Cycle;
    Ok(Criteria {
        cm_sym2: g.diameter().at_most(2),
        cm_sym_high: g.disjoint_pairs_in_4cycles(),
        eq2: n == 3 || ((n == 4 || n == 5) && special),
        eq_high: n == 3 || (n == 4 && special),
        cm_ord2: n == 3 || (cycle && (n == 4 || n == 5)),
        cm_ord_high: n == 3 || (cycle && n == 4),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            AmbientContext::with_vars(n).unwrap(),
            gens.iter().map(|g| mono(g)),
        )
        .unwrap()
    }

    fn two_edges() -> Graph {
        Graph::new(4, [(1, 2), (3, 4)]).unwrap()
    }

    #[test]
    fn construction_rules() {
        assert!(Graph::new(2, [(1, 2)]).is_err());
        assert!(Graph::new(3, [(1, 1), (2, 3)]).is_err());
        assert!(Graph::new(3, [(1, 2)]).is_err());
        assert!(Graph::new(3, [(1, 2), (2, 1), (2, 3)]).is_err());
        assert!(Graph::new(3, [(1, 4), (2, 3)]).is_err());
        let g = Graph::new(3, [(2, 3), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn parse_text_format() {
        let g: Graph = "n 4\n1 2\n2 3\n\n3 4\n4 1\n".parse().unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
        assert_eq!(g.to_text().parse::<Graph>().unwrap(), g);
        assert!("n 4\n1 2\n2 1\n3 4\n".parse::<Graph>().is_err());
        assert!("1 2\n".parse::<Graph>().is_err());
        assert!("n 4\n1 2 3\n".parse::<Graph>().is_err());
        assert!("".parse::<Graph>().is_err());
        assert!(matches!(
            "n 3\n1 x\n".parse::<Graph>(),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn edge_mask_round_trip() {
        let g = Graph::path(4).unwrap();
        let m = g.edge_mask().unwrap();
        // pairs 12,13,14,23,24,34 -> bits 0,3,5
        assert_eq!(m, 0b101001);
        assert_eq!(Graph::from_edge_mask(4, m).unwrap(), g);
        assert!(Graph::from_edge_mask(4, 1 << 6).is_err());
    }

    #[test]
    fn ideal_of_c4_is_complete_intersection() {
        let g = Graph::cycle(4).unwrap();
        let i = ideal_of_graph(&g);
        assert_eq!(i, ideal(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]));
        assert_eq!(i, ideal_of_graph_direct(&g));
    }

    #[test]
    fn ideal_of_p4_and_k4() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(
            ideal_of_graph(&p4),
            ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, 1]])
        );
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            ideal_of_graph(&k4),
            ideal(
                4,
                &[&[1, 1, 1, 0], &[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]]
            )
        );
    }

    #[test]
    fn symbolic_power_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(symbolic_power(&k4, 1), ideal_of_graph(&k4));
        let s2 = symbolic_power(&k4, 2);
        assert!(s2.contains(&mono(&[1, 1, 1, 1])));
        let f = mono(&[2, 2, 2, 1]);
        assert!(symbolic_power(&k4, 3).contains(&f));
        assert!(!ordinary_power(&k4, 3).contains(&f));
        assert!(in_symbolic_power(&k4, 3, &f));
    }

    #[test]
    fn symbolic_power_of_principal_case() {
        // n = 3: I_G is principal, so both powers coincide
        for g in [Graph::path(3).unwrap(), Graph::complete(3).unwrap()] {
            assert_eq!(ideal_of_graph(&g).generators().len(), 1);
            for m in 2..=4 {
                assert_eq!(symbolic_power(&g, m), ordinary_power(&g, m));
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let a = DegreeVector::zero(5);
        let d = delta_a_closed_form(&c5, 3, &a).unwrap();
        assert_eq!(d.facets().len(), 5);

        // sums outside each edge for a = (1,1,2,0,0), total 4:
        // 12 -> 2, 23 -> 1, 34 -> 2, 45 -> 4, 15 -> 3; keep those < 3
        let a = DegreeVector::new(vec![1, 1, 2, 0, 0]);
        let d = delta_a_closed_form(&c5, 3, &a).unwrap();
        assert_eq!(d.facet_lists(), vec![vec![1, 2], vec![2, 3], vec![3, 4]]);
        assert!(d.is_connected());

        // a = (2,0,1,1,0): 12 -> 2, 23 -> 3, 34 -> 2, 45 -> 3, 15 -> 2
        let a = DegreeVector::new(vec![2, 0, 1, 1, 0]);
        let d = delta_a_closed_form(&c5, 3, &a).unwrap();
        assert_eq!(d.facet_lists(), vec![vec![1, 2], vec![1, 5], vec![3, 4]]);
        assert!(!d.is_connected());

        let bad = DegreeVector::new(vec![0, -1, 0, 0, 0]);
        assert_eq!(
            delta_a_closed_form(&c5, 3, &bad),
            Err(Error::NegativeCoordinate(2))
        );
    }

    #[test]
    fn closed_form_for_two_heavy_vertices() {
        // a = (m-1)(e_r + e_s) keeps exactly the edges meeting r or s
        let g = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 4)]).unwrap();
        for m in 2..=4u32 {
            for r in 1..=5 {
                for s in (r + 1)..=5 {
                    let mut c = vec![0i64; 5];
                    c[r - 1] = i64::from(m - 1);
                    c[s - 1] = i64::from(m - 1);
                    let d = delta_a_closed_form(&g, m, &DegreeVector::new(c)).unwrap();
                    let expected: Vec<Vec<usize>> = SimplicialComplex::from_faces(
                        5,
                        g.edges()
                            .iter()
                            .filter(|&&(i, j)| i == r || j == r || i == s || j == s)
                            .map(|&(i, j)| Face::from_vertices(&[i, j])),
                    )
                    .facet_lists();
                    assert_eq!(d.facet_lists(), expected);
                }
            }
        }
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(Graph::cycle(5).unwrap().diameter(), Diameter::Finite(2));
        assert_eq!(Graph::path(4).unwrap().diameter(), Diameter::Finite(3));
        assert_eq!(two_edges().diameter(), Diameter::Infinite);
        assert_eq!(Graph::complete(4).unwrap().diameter(), Diameter::Finite(1));
        assert_eq!(Diameter::Infinite.to_string(), "inf");
    }

    #[test]
    fn four_cycle_condition() {
        assert!(Graph::cycle(4).unwrap().disjoint_pairs_in_4cycles());
        assert!(!Graph::cycle(5).unwrap().disjoint_pairs_in_4cycles());
        assert!(Graph::complete(4).unwrap().disjoint_pairs_in_4cycles());
        assert!(Graph::complete(5).unwrap().disjoint_pairs_in_4cycles());
        // star: no disjoint pairs at all
        assert!(Graph::new(4, [(1, 2), (1, 3), (1, 4)])
            .unwrap()
            .disjoint_pairs_in_4cycles());
        assert!(!two_edges().disjoint_pairs_in_4cycles());
    }

    #[test]
    fn classification() {
        assert_eq!(Graph::path(4).unwrap().classify(), GraphClass::Path);
        assert_eq!(Graph::cycle(5).unwrap().classify(), GraphClass::Cycle);
        assert_eq!(two_edges().classify(), GraphClass::TwoDisjointEdges);
        assert_eq!(Graph::complete(4).unwrap().classify(), GraphClass::Other);
        assert_eq!(
            Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap().classify(),
            GraphClass::Other
        );
        assert_eq!(Graph::complete(3).unwrap().classify(), GraphClass::Cycle);
        assert_eq!(classify_edges(&[(1, 2), (2, 3)]), (GraphClass::Path, 3));
    }

    #[test]
    fn complement_and_bipartite() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.complement(), vec![(1, 3), (2, 4)]);
        assert!(is_bipartite(4, &c4.complement()));
        let k4 = Graph::complete(4).unwrap();
        assert!(k4.complement().is_empty());
        assert!(is_bipartite(4, &k4.complement()));
        let c5 = Graph::cycle(5).unwrap();
        let comp = c5.complement();
        assert_eq!(comp.len(), 5);
        assert_eq!(classify_edges(&comp).0, GraphClass::Cycle);
        assert!(!is_bipartite(5, &comp));
    }

    #[test]
    fn criteria_examples() {
        let c5 = criteria(&Graph::cycle(5).unwrap(), 2).unwrap();
        assert_eq!(
            c5,
            Criteria {
                cm_sym2: true,
                cm_sym_high: false,
                eq2: true,
                eq_high: false,
                cm_ord2: true,
                cm_ord_high: false
            }
        );
        let c4 = criteria(&Graph::cycle(4).unwrap(), 3).unwrap();
        assert!(
            c4.cm_sym2 && c4.cm_sym_high && c4.eq2 && c4.eq_high && c4.cm_ord2 && c4.cm_ord_high
        );
        let k5 = criteria(&Graph::complete(5).unwrap(), 2).unwrap();
        assert_eq!(
            k5,
            Criteria {
                cm_sym2: true,
                cm_sym_high: true,
                eq2: false,
                eq_high: false,
                cm_ord2: false,
                cm_ord_high: false
            }
        );
        assert!(criteria(&Graph::cycle(4).unwrap(), 1).is_err());
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = Graph::path(5).unwrap();
        let h = g.relabel(&[3, 1, 5, 2, 4]).unwrap();
        assert_eq!(h.classify(), GraphClass::Path);
        assert_eq!(h.diameter(), Diameter::Finite(4));
    }
}
