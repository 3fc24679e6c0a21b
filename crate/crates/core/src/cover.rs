//! Vertex covers of simplicial complexes and the ideal `I*(Δ)` whose
//! symbolic powers they describe.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{AmbientContext, Monomial, MonomialIdeal};
use crate::simplicial::{Face, SimplicialComplex};

/// A vertex weighting `c ∈ N^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CoverVector(pub Vec<u32>);

impl CoverVector {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    fn weight(&self, f: Face) -> u64 {
        f.vertices()
            .into_iter()
            .map(|v| u64::from(self.0[v - 1]))
            .sum()
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.0.clone())
    }
}

impl From<&Monomial> for CoverVector {
    fn from(m: &Monomial) -> Self {
        CoverVector(m.exponents().to_vec())
    }
}

/// `sum_{i ∈ F} c_i >= m` for every facet `F`.
pub fn is_m_cover(c: &CoverVector, k: &SimplicialComplex, m: u32) -> bool {
    k.facets().iter().all(|&f| c.weight(f) >= u64::from(m))
}

fn star_ambient(k: &SimplicialComplex) -> Result<AmbientContext> {
    if k.is_void() {
        return Err(Error::NoFacets);
    }
    if let Some(f) = k.facets().iter().find(|f| f.is_empty()) {
        return Err(Error::EmptyFacet(f.vertices()));
    }
    AmbientContext::with_vars(k.vertex_capacity())
}

/// `⋂_F (x_i : i ∈ F)^m` over the facets `F`; `m = 1` gives `I*(Δ)`.
pub fn ideal_star_symbolic_power(k: &SimplicialComplex, m: u32) -> Result<MonomialIdeal> {
    let ambient = star_ambient(k)?;
    let mut acc = MonomialIdeal::unit(ambient);
    for f in k.facets() {
        let p = MonomialIdeal::prime_power(ambient, &f.vertices(), m)?;
        acc = acc.intersect(&p)?;
    }
    Ok(acc)
}

/// `I*(Δ)`: the intersection over facets `F` of the prime generated by the
/// variables in `F`.
pub fn ideal_star(k: &SimplicialComplex) -> Result<MonomialIdeal> {
    ideal_star_symbolic_power(k, 1)
}

/// Whether `I*(Δ)^(m) = I*(Δ)^m` for every `m` in `2..=m_max`.
///
/// This is a bounded check. For pure complexes of dimension `n - 3` the
/// answer is already settled by `m_max = 3`; outside that family it only
/// certifies the range it was run on.
pub fn is_standard_graded(k: &SimplicialComplex, m_max: u32) -> Result<bool> {
    Ok(first_failure(k, m_max)?.is_none())
}

/// The smallest `m <= m_max` where the symbolic and ordinary powers differ,
/// with a generator of the symbolic power outside the ordinary one.
pub fn first_failure(k: &SimplicialComplex, m_max: u32) -> Result<Option<(u32, Monomial)>> {
    if m_max < 2 {
        return Err(Error::OutOfRange(format!(
            "m_max must be >= 2, got {m_max}"
        )));
    }
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    let base = ideal_star(k)?;
    if k.dimension() == Some(0) {
        // principal ideal
        return Ok(None);
    }
    let mut ordinary = base.clone();
    for m in 2..=m_max {
        ordinary = ordinary.multiply(&base)?;
        let symbolic = ideal_star_symbolic_power(k, m)?;
        if !symbolic.equals(&ordinary) {
            let w = symbolic
                .generators()
                .iter()
                .find(|g| !ordinary.contains(g))
                .cloned()
                .expect("ordinary power is contained in the symbolic power");
            return Ok(Some((m, w)));
        }
    }
    Ok(None)
}

/// Minimal vertex covers of the facets as 0/1 vectors, smallest first.
pub fn minimal_one_covers(k: &SimplicialComplex) -> Vec<CoverVector> {
    let n = k.vertex_capacity();
    let facets: Vec<u32> = k.facets().iter().map(|f| f.0).collect();
    let mut found: Vec<u32> = Vec::new();
    // branch on the first uncovered facet
    fn rec(facets: &[u32], chosen: u32, out: &mut Vec<u32>) {
        match facets.iter().find(|&&f| f & chosen == 0) {
            None => out.push(chosen),
            Some(&f) => {
                let mut bits = f;
                while bits != 0 {
                    let b = bits & bits.wrapping_neg();
                    bits &= bits - 1;
                    rec(facets, chosen | b, out);
                }
            }
        }
    }
    rec(&facets, 0, &mut found);
    found.sort_unstable_by_key(|&s| Face(s));
    found.dedup();
    let mut minimal: Vec<u32> = Vec::new();
    for s in found {
        if !minimal.iter().any(|&t| t & !s == 0) {
            minimal.push(s);
        }
    }
    minimal
        .into_iter()
        .map(|s| CoverVector((0..n).map(|i| (s >> i) & 1).collect()))
        .collect()
}

/// `m` one-covers whose coordinate sum is at most `c`, if they exist.
pub fn decompose_cover(
    c: &CoverVector,
    k: &SimplicialComplex,
    m: u32,
) -> Result<Option<Vec<CoverVector>>> {
    if c.0.len() != k.vertex_capacity() {
        return Err(Error::AmbientMismatch {
            expected: k.vertex_capacity(),
            found: c.0.len(),
        });
    }
    if !is_m_cover(c, k, m) {
        return Err(Error::NotACover { m });
    }
    let covers = minimal_one_covers(k);
    let mut picked: Vec<usize> = Vec::new();
    let mut rest = c.0.clone();
    Ok(search(&covers, k, m, 0, &mut rest, &mut picked)
        .then(|| picked.iter().map(|&i| covers[i].clone()).collect()))
}

fn search(
    covers: &[CoverVector],
    k: &SimplicialComplex,
    left: u32,
    start: usize,
    rest: &mut Vec<u32>,
    picked: &mut Vec<usize>,
) -> bool {
    if left == 0 {
        return true;
    }
    // what remains must still cover every facet `left` times
    if !is_m_cover(&CoverVector(rest.clone()), k, left) {
        return false;
    }
    for idx in start..covers.len() {
        let cv = &covers[idx].0;
        if cv.iter().zip(rest.iter()).any(|(a, b)| a > b) {
            continue;
        }
        for (r, a) in rest.iter_mut().zip(cv) {
            *r -= a;
        }
        picked.push(idx);
        if search(covers, k, left - 1, idx, rest, picked) {
            return true;
        }
        picked.pop();
        for (r, a) in rest.iter_mut().zip(cv) {
            *r += a;
        }
    }
    false
}

/// Standard-gradedness through decompositions: every minimal generator of
/// each symbolic power up to `m_max` must split into one-covers.
pub fn is_standard_graded_by_decomposition(k: &SimplicialComplex, m_max: u32) -> Result<bool> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    for m in 2..=m_max {
        let symbolic = ideal_star_symbolic_power(k, m)?;
        for g in symbolic.generators() {
            if decompose_cover(&CoverVector::from(g), k, m)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(
            n,
            &facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn c4() -> SimplicialComplex {
        cx(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
    }

    fn c5() -> SimplicialComplex {
        cx(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]])
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            AmbientContext::with_vars(n).unwrap(),
            gens.iter().map(|g| Monomial::new(g.to_vec())),
        )
        .unwrap()
    }

    #[test]
    fn cover_examples() {
        assert!(is_m_cover(&CoverVector(vec![1, 0, 1, 0]), &c4(), 1));
        assert!(!is_m_cover(&CoverVector(vec![1, 0, 0, 0]), &c4(), 1));
        assert!(is_m_cover(&CoverVector(vec![0, 0, 0, 0]), &c4(), 0));
        assert!(is_m_cover(&CoverVector(vec![2, 0, 0, 5]), &c4(), 0));
    }

    #[test]
    fn ideal_star_examples() {
        let single = cx(4, &[&[1, 2]]);
        assert_eq!(
            ideal_star(&single).unwrap(),
            ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])
        );
        assert_eq!(
            ideal_star(&c4()).unwrap(),
            ideal(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]])
        );
        assert_eq!(
            ideal_star(&SimplicialComplex::empty_face(4)),
            Err(Error::EmptyFacet(vec![]))
        );
        assert_eq!(
            ideal_star(&SimplicialComplex::void(4)),
            Err(Error::NoFacets)
        );
        // a full facet gives the maximal ideal
        let full = cx(3, &[&[1, 2, 3]]);
        assert_eq!(
            ideal_star(&full).unwrap(),
            ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
        );
    }

    #[test]
    fn standard_graded_examples() {
        assert!(is_standard_graded(&c4(), 3).unwrap());
        assert!(!is_standard_graded(&c5(), 3).unwrap());
        assert!(is_standard_graded(&cx(4, &[&[1, 2], &[3, 4]]), 3).unwrap());
        assert_eq!(
            is_standard_graded(&cx(4, &[&[1, 2], &[3]]), 3),
            Err(Error::NotPure)
        );
        assert!(is_standard_graded(&cx(4, &[&[1], &[2], &[4]]), 3).unwrap());
        assert!(is_standard_graded(&c4(), 1).is_err());
    }

    #[test]
    fn c5_fails_already_at_two() {
        // all-ones is a 2-cover of the pentagon of weight 5, while every
        // 1-cover has weight at least 3
        let (m, w) = first_failure(&c5(), 3).unwrap().unwrap();
        assert_eq!(m, 2);
        assert_eq!(w.exponents(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn minimal_covers_of_c4() {
        let covers = minimal_one_covers(&c4());
        assert_eq!(
            covers,
            vec![CoverVector(vec![1, 0, 1, 0]), CoverVector(vec![0, 1, 0, 1])]
        );
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_cover(&CoverVector(vec![1, 1, 1, 1]), &c4(), 2)
            .unwrap()
            .unwrap();
        assert_eq!(d.len(), 2);
        let mut sum = [0u32; 4];
        for cv in &d {
            assert!(is_m_cover(cv, &c4(), 1));
            for (s, x) in sum.iter_mut().zip(cv.coords()) {
                *s += x;
            }
        }
        assert!(sum.iter().all(|&s| s <= 1));

        let one = decompose_cover(&CoverVector(vec![2, 1, 1, 0]), &c4(), 1)
            .unwrap()
            .unwrap();
        assert_eq!(one, vec![CoverVector(vec![1, 0, 1, 0])]);

        assert_eq!(
            decompose_cover(&CoverVector(vec![1, 0, 0, 0]), &c4(), 1),
            Err(Error::NotACover { m: 1 })
        );
    }

    #[test]
    fn pentagon_three_cover_without_decomposition() {
        // (2,1,2,1,2) = all-ones + (1,0,1,0,1) covers every edge 3 times but
        // has weight 8 < 9
        let c = CoverVector(vec![2, 1, 2, 1, 2]);
        assert!(is_m_cover(&c, &c5(), 3));
        assert_eq!(decompose_cover(&c, &c5(), 3).unwrap(), None);
        assert!(ideal_star_symbolic_power(&c5(), 3)
            .unwrap()
            .contains(&c.monomial()));
        assert!(!ideal_star(&c5()).unwrap().power(3).contains(&c.monomial()));
    }

    #[test]
    fn decomposition_route_agrees_on_examples() {
        for k in [c4(), c5(), cx(4, &[&[1, 2], &[3, 4]])] {
            assert_eq!(
                is_standard_graded(&k, 3).unwrap(),
                is_standard_graded_by_decomposition(&k, 3).unwrap()
            );
        }
    }
}
