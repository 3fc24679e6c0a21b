//! Simplicial complexes on `{1..n}`, the complexes `Δ(I)` and `Δ_a(I)`
//! attached to a monomial ideal, and connectivity.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, MAX_VARS};

/// A subset of `{1..n}`, stored as a bitmask (bit `i-1` for vertex `i`).
///
/// Ordered by size, then lexicographically by sorted vertex list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(pub u32);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_vertices(vs: &[usize]) -> Face {
        Face(vs.iter().fold(0u32, |m, &v| m | (1 << (v - 1))))
    }

    pub fn vertices(self) -> Vec<usize> {
        (0..32)
            .filter(|i| self.0 & (1 << i) != 0)
            .map(|i| i + 1)
            .collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // the smallest differing vertex belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vertices())
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices().serialize(s)
    }
}

fn full_mask(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

/// A simplicial complex stored by its facets.
///
/// The void complex (no faces) has no facets; the complex `{∅}` has the
/// single facet `∅`. They are different values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.facets.iter()).finish()
    }
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Self {
        Self { n, facets: vec![] }
    }

    pub fn empty_face(n: usize) -> Self {
        Self {
            n,
            facets: vec![Face::EMPTY],
        }
    }

    /// The complex generated by `faces`; non-maximal inputs are dropped.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = Face>) -> Self {
        let mut fs: Vec<Face> = faces.into_iter().collect();
        // larger faces first so each face is compared against the kept ones
        fs.sort_unstable_by(|a, b| b.cmp(a));
        fs.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(fs.len());
        for f in fs {
            if !kept.iter().any(|k| f.is_subset_of(*k)) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        Self { n, facets: kept }
    }

    /// Facets given as 1-based vertex lists.
    pub fn from_facet_lists(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::InvalidAmbientSize {
                got: n,
                max: MAX_VARS,
            });
        }
        for f in facets {
            if let Some(&v) = f.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VariableOutOfRange { index: v, n });
            }
        }
        Ok(Self::from_faces(
            n,
            facets.iter().map(|f| Face::from_vertices(f)),
        ))
    }

    /// All `F ⊆ allowed` with `is_face(F)`; `is_face` must be closed under
    /// taking subsets. Faces are found by extending in increasing vertex
    /// order, pruning as soon as a set fails.
    pub fn from_predicate(n: usize, allowed: Face, is_face: impl Fn(Face) -> bool) -> Self {
        if !is_face(Face::EMPTY) {
            return Self::void(n);
        }
        let mut facets = Vec::new();
        let mut stack = vec![(Face::EMPTY, 0usize)];
        while let Some((f, next)) = stack.pop() {
            let mut extended = false;
            for v in 0..n {
                let bit = 1u32 << v;
                if allowed.0 & bit == 0 || f.0 & bit != 0 {
                    continue;
                }
                let g = Face(f.0 | bit);
                if is_face(g) {
                    extended = true;
                    if v >= next {
                        stack.push((g, v + 1));
                    }
                }
            }
            if !extended {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        Self { n, facets }
    }

    pub fn vertex_capacity(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.vertices()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_face(&self) -> bool {
        self.facets == [Face::EMPTY]
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|g| f.is_subset_of(*g))
    }

    /// Union of all faces.
    pub fn vertex_set(&self) -> Face {
        Face(self.facets.iter().fold(0, |m, f| m | f.0))
    }

    /// Largest face size minus one; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Every face, sorted by size then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut out = std::collections::BTreeSet::new();
        for f in &self.facets {
            // enumerate subsets of the facet mask
            let m = f.0;
            let mut s = m;
            loop {
                out.insert(Face(s));
                if s == 0 {
                    break;
                }
                s = (s - 1) & m;
            }
        }
        out.into_iter().collect()
    }

    /// `f_{-1}, f_0, f_1, ...`: number of faces of each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let Some(d) = self.dimension() else {
            return vec![];
        };
        let mut fv = vec![0usize; (d + 2) as usize];
        for f in self.faces() {
            fv[f.len()] += 1;
        }
        fv
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains_face(*f))
    }

    /// Connectivity of the 1-skeleton on the vertices that occur. The void
    /// complex and `{∅}` are reported as disconnected; use homology for them.
    pub fn is_connected(&self) -> bool {
        let verts = self.vertex_set();
        if verts.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for f in &self.facets {
            let vs = f.vertices();
            for w in vs.windows(2) {
                let (a, b) = (find(&mut parent, w[0] - 1), find(&mut parent, w[1] - 1));
                parent[a] = b;
            }
        }
        let vs = verts.vertices();
        let root = find(&mut parent, vs[0] - 1);
        vs.iter().all(|&v| find(&mut parent, v - 1) == root)
    }

    /// Number of connected components of the occurring vertices.
    pub fn component_count(&self) -> usize {
        let verts = self.vertex_set().vertices();
        let mut comps: Vec<Face> = Vec::new();
        for f in &self.facets {
            if f.is_empty() {
                continue;
            }
            let mut merged = *f;
            comps.retain(|c| {
                if c.is_disjoint(merged) {
                    true
                } else {
                    merged = merged.union(*c);
                    false
                }
            });
            comps.push(merged);
        }
        debug_assert_eq!(comps.iter().map(|c| c.len()).sum::<usize>(), verts.len());
        comps.len()
    }
}

/// A point of `Z^n`, used as a multidegree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeVector {
    coords: Vec<i64>,
}

impl fmt::Debug for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl DegreeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// `G_a = { i : a_i < 0 }`.
    pub fn negative_support(&self) -> Face {
        Face(
            self.coords
                .iter()
                .enumerate()
                .filter(|(_, &c)| c < 0)
                .fold(0, |m, (i, _)| m | (1 << i)),
        )
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// Negative coordinates replaced by zero.
    pub fn clamped_monomial(&self) -> Monomial {
        Monomial::new(
            self.coords
                .iter()
                .map(|&c| c.max(0) as u32)
                .collect::<Vec<_>>(),
        )
    }
}

impl std::str::FromStr for DegreeVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>().map_err(|e| Error::Parse {
                    line: 1,
                    msg: format!("bad coordinate `{t}`: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DegreeVector::new(coords))
    }
}

/// `Δ(I)`: all `F` whose squarefree monomial is not in `√I`.
pub fn delta_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.n();
    let supports: Vec<u32> = ideal
        .radical()
        .generators()
        .iter()
        .map(Monomial::support_mask)
        .collect();
    Ok(SimplicialComplex::from_predicate(
        n,
        Face(full_mask(n)),
        |f| supports.iter().all(|&s| s & !f.0 != 0),
    ))
}

/// For each generator `b`, the set `{ i ∉ G_a : b_i > a_i }`. A face `F`
/// disjoint from `G_a` lies in `Δ_a(I)` iff none of these sets is contained
/// in `F`. Only inclusion-minimal sets are returned.
pub(crate) fn exceed_sets(ideal: &MonomialIdeal, a: &DegreeVector) -> Vec<u32> {
    let neg = a.negative_support().0;
    let mut sets: Vec<u32> = ideal
        .generators()
        .iter()
        .map(|b| {
            b.exponents()
                .iter()
                .zip(a.coords())
                .enumerate()
                .filter(|&(i, (&bi, &ai))| neg & (1 << i) == 0 && i64::from(bi) > ai)
                .fold(0u32, |m, (i, _)| m | (1 << i))
        })
        .collect();
    sets.sort_unstable_by_key(|s| s.count_ones());
    sets.dedup();
    let mut minimal: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !minimal.iter().any(|&k| k & !s == 0) {
            minimal.push(s);
        }
    }
    minimal
}

/// `Δ_a(I)`: faces `F` with `F ∩ G_a = ∅` such that every minimal generator
/// `x^b` has some `i ∉ F ∪ G_a` with `b_i > a_i`.
pub fn delta_a(ideal: &MonomialIdeal, a: &DegreeVector) -> SimplicialComplex {
    debug_assert_eq!(a.n(), ideal.n());
    let n = ideal.n();
    let allowed = Face(full_mask(n) & !a.negative_support().0);
    let sets = exceed_sets(ideal, a);
    SimplicialComplex::from_predicate(n, allowed, |f| sets.iter().all(|&s| s & !f.0 != 0))
}

/// `I` with `x_i = 1` for every `i ∈ F ∪ N`, minimalized. Membership of the
/// clamped `x^a` in this ideal decides whether `F` leaves `Δ_a(I)` when
/// `N = G_a`.
pub fn restrict_ideal(ideal: &MonomialIdeal, f: Face, negative: Face) -> Result<MonomialIdeal> {
    if !f.is_disjoint(negative) {
        return Err(Error::OverlappingSets);
    }
    Ok(ideal.substitute_one(&f.union(negative).vertices()))
}

/// `Δ_a(I)` computed through localization: `F` is a face iff it avoids
/// `G_a` and the clamped `x^a` is outside `restrict_ideal(I, F, G_a)`.
pub fn delta_a_by_localization(ideal: &MonomialIdeal, a: &DegreeVector) -> SimplicialComplex {
    let neg = a.negative_support();
    let xa = a.clamped_monomial();
    localized_delta(ideal.n(), neg, |f| {
        restrict_ideal(ideal, f, neg)
            .expect("disjoint by filter")
            .contains(&xa)
    })
}

/// Faces avoiding `neg` for which `in_localization` is false.
fn localized_delta(
    n: usize,
    neg: Face,
    in_localization: impl Fn(Face) -> bool,
) -> SimplicialComplex {
    let faces: Vec<Face> = (0..(1u64 << n))
        .map(|m| Face(m as u32))
        .filter(|&f| f.is_disjoint(neg) && !in_localization(f))
        .collect();
    if faces.is_empty() {
        return SimplicialComplex::void(n);
    }
    SimplicialComplex::from_faces(n, faces)
}

/// Every localization of one ideal, indexed by the set of inverted
/// variables, for repeated `Δ_a` queries through the localization route.
#[derive(Debug, Clone)]
pub struct Localizations {
    n: usize,
    by_mask: Vec<MonomialIdeal>,
}

impl Localizations {
    pub const MAX_VARS: usize = 16;

    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let n = ideal.n();
        if n > Self::MAX_VARS {
            return Err(Error::OutOfRange(format!(
                "localization table needs n <= {}, got {n}",
                Self::MAX_VARS
            )));
        }
        let by_mask = (0..1u32 << n)
            .map(|m| ideal.substitute_one(&Face(m).vertices()))
            .collect();
        Ok(Self { n, by_mask })
    }

    pub fn restricted(&self, f: Face, negative: Face) -> Result<&MonomialIdeal> {
        if !f.is_disjoint(negative) {
            return Err(Error::OverlappingSets);
        }
        Ok(&self.by_mask[f.union(negative).0 as usize])
    }

    /// Same result as [`delta_a_by_localization`].
    pub fn delta_a(&self, a: &DegreeVector) -> SimplicialComplex {
        let neg = a.negative_support();
        let xa = a.clamped_monomial();
        localized_delta(self.n, neg, |f| {
            self.by_mask[f.union(neg).0 as usize].contains(&xa)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::AmbientContext;

    fn amb(n: usize) -> AmbientContext {
        AmbientContext::with_vars(n).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(amb(n), gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(
            n,
            &facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn face_order() {
        let mut fs = [
            Face::from_vertices(&[2, 3]),
            Face::from_vertices(&[1]),
            Face::from_vertices(&[1, 3]),
            Face::from_vertices(&[1, 2]),
            Face::EMPTY,
        ];
        fs.sort();
        let lists: Vec<_> = fs.iter().map(|f| f.vertices()).collect();
        assert_eq!(
            lists,
            vec![vec![], vec![1], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn void_and_empty_face_differ() {
        let v = SimplicialComplex::void(4);
        let e = SimplicialComplex::empty_face(4);
        assert_ne!(v, e);
        assert!(v.is_void() && !v.is_empty_face());
        assert!(e.is_empty_face() && !e.is_void());
        assert_eq!(v.dimension(), None);
        assert_eq!(e.dimension(), Some(-1));
        assert!(!v.is_connected());
        assert!(!e.is_connected());
    }

    #[test]
    fn from_faces_drops_non_maximal() {
        let k = SimplicialComplex::from_faces(
            4,
            [
                Face::from_vertices(&[1]),
                Face::from_vertices(&[1, 2]),
                Face::from_vertices(&[3]),
                Face::from_vertices(&[1, 2]),
            ],
        );
        assert_eq!(k.facet_lists(), vec![vec![3], vec![1, 2]]);
    }

    #[test]
    fn delta_of_principal_cubic() {
        let i = ideal(3, &[&[1, 1, 1]]);
        let d = delta_of_ideal(&i).unwrap();
        // oracle: scan all 8 subsets
        let mut faces = vec![];
        for m in 0u32..8 {
            let f = Face(m);
            let sq = Monomial::squarefree(3, &f.vertices());
            if !i.radical().contains(&sq) {
                faces.push(f);
            }
        }
        assert_eq!(d, SimplicialComplex::from_faces(3, faces));
        assert_eq!(d.facet_lists(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn delta_of_unit_is_error() {
        assert_eq!(
            delta_of_ideal(&MonomialIdeal::unit(amb(3))),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn delta_of_zero_is_simplex() {
        let d = delta_of_ideal(&MonomialIdeal::zero(amb(3))).unwrap();
        assert_eq!(d.facet_lists(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn delta_a_at_zero_is_delta() {
        let i = ideal(4, &[&[2, 0, 2, 0], &[1, 1, 1, 1], &[0, 2, 0, 2]]);
        assert_eq!(
            delta_a(&i, &DegreeVector::zero(4)),
            delta_of_ideal(&i).unwrap()
        );
    }

    #[test]
    fn delta_a_negative_representative_does_not_matter() {
        let i = ideal(4, &[&[2, 0, 2, 0], &[1, 1, 1, 1], &[0, 2, 0, 2]]);
        let a1 = DegreeVector::new(vec![-1, 1, 0, 0]);
        let a5 = DegreeVector::new(vec![-5, 1, 0, 0]);
        assert_eq!(delta_a(&i, &a1), delta_a(&i, &a5));
        assert_eq!(delta_a(&i, &a1), delta_a_by_localization(&i, &a1));
    }

    #[test]
    fn delta_a_of_unit_ideal_is_void() {
        let u = MonomialIdeal::unit(amb(3));
        assert!(delta_a(&u, &DegreeVector::zero(3)).is_void());
    }

    #[test]
    fn connectivity_examples() {
        let c5 = cx(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        assert!(c5.is_connected());
        assert_eq!(c5.component_count(), 1);
        let two = cx(4, &[&[1, 2], &[3, 4]]);
        assert!(!two.is_connected());
        assert_eq!(two.component_count(), 2);
        assert!(cx(4, &[&[1]]).is_connected());
        // vertices that never occur are ignored
        assert!(cx(6, &[&[1, 2], &[2, 3]]).is_connected());
    }

    #[test]
    fn restrict_ideal_examples() {
        let i = ideal(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        let r = restrict_ideal(&i, Face::from_vertices(&[1, 2]), Face::EMPTY).unwrap();
        assert_eq!(r, ideal(4, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
        assert_eq!(restrict_ideal(&i, Face::EMPTY, Face::EMPTY).unwrap(), i);
        assert_eq!(
            restrict_ideal(&i, Face::from_vertices(&[1]), Face::from_vertices(&[1, 2])),
            Err(Error::OverlappingSets)
        );
    }

    #[test]
    fn faces_and_f_vector() {
        let k = cx(4, &[&[1, 2, 3], &[3, 4]]);
        assert_eq!(k.f_vector(), vec![1, 4, 4, 1]);
        assert_eq!(k.faces().len(), 10);
        assert!(!k.is_pure());
        assert!(cx(4, &[&[1, 2], &[3, 4]]).is_pure());
    }

    #[test]
    fn degree_vector_parse() {
        let a: DegreeVector = "1, -2,0".parse().unwrap();
        assert_eq!(a.coords(), &[1, -2, 0]);
        assert_eq!(a.negative_support(), Face::from_vertices(&[2]));
        assert!("1,x".parse::<DegreeVector>().is_err());
    }
}
