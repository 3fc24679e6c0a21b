//! Multigraded local cohomology of `S/I` at the maximal ideal, evaluated
//! combinatorially through the complexes `Δ_a(I)`, and the depth and
//! Cohen-Macaulay decisions built on it.
//!
//! The search domain is finite: a coordinate `a_i` outside `G_a` only
//! matters up to `ρ_i - 1`, where `ρ_i` is the largest `i`-th exponent of a
//! minimal generator, and coordinates inside `G_a` are never read, so a
//! single representative `-1` covers all negative values. `G_a` itself has
//! to be a face of `Δ(I)` for the component to be nonzero.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::reduced_homology_dims;
use crate::monomial::MonomialIdeal;
use crate::simplicial::{delta_a, delta_of_ideal, DegreeVector, Face, SimplicialComplex};

/// The finite set of degrees that can carry nonzero local cohomology.
#[derive(Debug, Clone)]
pub struct DegreeBox {
    rho: Vec<u32>,
    negative_supports: Vec<Face>,
}

impl DegreeBox {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let delta = delta_of_ideal(ideal)?;
        Ok(Self::with_delta(ideal, &delta))
    }

    fn with_delta(ideal: &MonomialIdeal, delta: &SimplicialComplex) -> Self {
        Self {
            rho: ideal.max_exponents(),
            negative_supports: delta.faces(),
        }
    }

    pub fn rho(&self) -> &[u32] {
        &self.rho
    }

    /// Admissible `G_a`: the faces of `Δ(I)`, in face order.
    pub fn negative_supports(&self) -> &[Face] {
        &self.negative_supports
    }

    /// Degrees with `G_a = neg`: `-1` on `neg`, `0..ρ_i` elsewhere, in
    /// lexicographic order of the coordinates.
    pub fn points_with_support(&self, neg: Face) -> Vec<DegreeVector> {
        let n = self.rho.len();
        let free: Vec<usize> = (0..n).filter(|&i| neg.0 & (1 << i) == 0).collect();
        if free.iter().any(|&i| self.rho[i] == 0) {
            return vec![];
        }
        let mut cur: Vec<i64> = (0..n)
            .map(|i| if neg.0 & (1 << i) != 0 { -1 } else { 0 })
            .collect();
        let mut out = Vec::new();
        loop {
            out.push(DegreeVector::new(cur.clone()));
            // odometer over the free coordinates, last coordinate fastest
            let mut k = free.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                let i = free[k];
                if cur[i] + 1 < i64::from(self.rho[i]) {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// Every point, grouped by negative support in face order.
    pub fn points(&self) -> Vec<DegreeVector> {
        self.negative_supports
            .iter()
            .flat_map(|&neg| self.points_with_support(neg))
            .collect()
    }
}

/// `degree_box(I)`.
pub fn degree_box(ideal: &MonomialIdeal) -> Result<DegreeBox> {
    DegreeBox::new(ideal)
}

/// `dim S/I`: the largest face size of `Δ(I)`.
pub fn krull_dim(ideal: &MonomialIdeal) -> Result<usize> {
    let d = delta_of_ideal(ideal)?;
    Ok(d.facets().iter().map(|f| f.len()).max().unwrap_or(0))
}

/// `dim_k H^i_m(S/I)_a`.
pub fn graded_lc_dim(ideal: &MonomialIdeal, i: usize, a: &DegreeVector) -> usize {
    let Ok(delta) = delta_of_ideal(ideal) else {
        return 0;
    };
    graded_dim_with(ideal, &delta, i, a)
}

fn graded_dim_with(
    ideal: &MonomialIdeal,
    delta: &SimplicialComplex,
    i: usize,
    a: &DegreeVector,
) -> usize {
    let neg = a.negative_support();
    if !delta.contains_face(neg) {
        return 0;
    }
    let k = i as isize - neg.len() as isize - 1;
    if k < -1 {
        return 0;
    }
    let da = delta_a(ideal, a);
    reduced_homology_dims(&da, ideal.ambient().field_char()).dim(k)
}

/// A degree where `H^i_m(S/I)` does not vanish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyWitness {
    pub i: usize,
    pub a: DegreeVector,
    pub dim: usize,
}

/// Depth and Krull dimension of `S/I`, with the first nonvanishing degree
/// below the top when the ring is not Cohen-Macaulay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    pub depth: usize,
    pub krull_dim: usize,
    pub witness: Option<CohomologyWitness>,
}

impl DepthReport {
    pub fn is_cohen_macaulay(&self) -> bool {
        self.depth == self.krull_dim
    }
}

/// Nonzero graded pieces of all `H^i_m(S/I)` over the degree box.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CohomologyTable {
    entries: BTreeMap<(usize, DegreeVector), usize>,
}

impl CohomologyTable {
    pub fn get(&self, i: usize, a: &DegreeVector) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &DegreeVector, usize)> {
        self.entries.iter().map(|((i, a), &d)| (*i, a, d))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest cohomological index with a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }
}

/// Precomputed data for repeated queries against one ideal.
#[derive(Debug, Clone)]
pub struct LocalCohomology<'a> {
    ideal: &'a MonomialIdeal,
    delta: SimplicialComplex,
    degree_box: DegreeBox,
    krull_dim: usize,
}

impl<'a> LocalCohomology<'a> {
    pub fn new(ideal: &'a MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let delta = delta_of_ideal(ideal)?;
        let degree_box = DegreeBox::with_delta(ideal, &delta);
        let krull_dim = delta.facets().iter().map(|f| f.len()).max().unwrap_or(0);
        Ok(Self {
            ideal,
            delta,
            degree_box,
            krull_dim,
        })
    }

    pub fn delta(&self) -> &SimplicialComplex {
        &self.delta
    }

    pub fn degree_box(&self) -> &DegreeBox {
        &self.degree_box
    }

    pub fn krull_dim(&self) -> usize {
        self.krull_dim
    }

    pub fn graded_dim(&self, i: usize, a: &DegreeVector) -> usize {
        graded_dim_with(self.ideal, &self.delta, i, a)
    }

    /// First degree in box order with `H^i ≠ 0`.
    pub fn first_nonzero(&self, i: usize) -> Option<CohomologyWitness> {
        // only |G_a| <= i can contribute to H^i
        let points: Vec<DegreeVector> = self
            .degree_box
            .negative_supports()
            .iter()
            .filter(|f| f.len() <= i)
            .flat_map(|&neg| self.degree_box.points_with_support(neg))
            .collect();
        points.into_par_iter().find_map_first(|a| {
            let dim = self.graded_dim(i, &a);
            (dim > 0).then_some(CohomologyWitness { i, a, dim })
        })
    }

    /// Scans `i = 0, 1, ...` and stops at the first nonvanishing module.
    pub fn depth_report(&self) -> DepthReport {
        for i in 0..self.krull_dim {
            if let Some(w) = self.first_nonzero(i) {
                return DepthReport {
                    depth: i,
                    krull_dim: self.krull_dim,
                    witness: Some(w),
                };
            }
        }
        DepthReport {
            depth: self.krull_dim,
            krull_dim: self.krull_dim,
            witness: None,
        }
    }

    pub fn table(&self) -> CohomologyTable {
        let field_char = self.ideal.ambient().field_char();
        let points = self.degree_box.points();
        let found: Vec<Vec<((usize, DegreeVector), usize)>> = points
            .into_par_iter()
            .map(|a| {
                let h = reduced_homology_dims(&delta_a(self.ideal, &a), field_char);
                let shift = a.negative_support().len() as isize + 1;
                h.dims()
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d > 0)
                    .map(|(j, &d)| {
                        let k = j as isize - 1;
                        (((k + shift) as usize, a.clone()), d)
                    })
                    .collect()
            })
            .collect();
        CohomologyTable {
            entries: found.into_iter().flatten().collect(),
        }
    }
}

pub fn depth(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(LocalCohomology::new(ideal)?.depth_report().depth)
}

pub fn is_cohen_macaulay(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(LocalCohomology::new(ideal)?
        .depth_report()
        .is_cohen_macaulay())
}
