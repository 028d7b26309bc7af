//! Lattice-point counting on the simplex `Δ = conv(e_0, …, e_n)` and its faces.
//!
//! Points of `N` are stored as integer numerator vectors `a` standing for
//! `a/d`. A face is a nonempty vertex subset `S`; its relative interior at
//! level `k` consists of the `v ∈ N` with `Σ v_i = k`, `v_i > 0` on `S` and
//! `v_i = 0` off `S`. Points are enumerated as a unit-box representative plus
//! a nonnegative integer translate.
//!
//! The Hodge vector is recovered from the Ehrhart numerators `φ_k(Γ)` of all
//! faces by inclusion–exclusion over codimension. This module does not call
//! into [`crate::agecalc`]; it is the independent route.

use rayon::prelude::*;

use crate::agecalc::WeightTuple;
use crate::arith::VisitBudget;
use crate::error::Result;

/// The lattice `N` for a weight tuple, in the caller's coordinate order.
#[derive(Debug, Clone)]
pub struct LatticeContext {
    weights: WeightTuple,
}

impl LatticeContext {
    pub fn new(weights: &WeightTuple) -> Self {
        LatticeContext {
            weights: weights.clone(),
        }
    }

    pub fn weights(&self) -> &WeightTuple {
        &self.weights
    }

    pub fn denominator(&self) -> u64 {
        self.weights.degree()
    }

    pub fn dim(&self) -> usize {
        self.weights.dim()
    }

    /// Residue `k` with `a/d ≡ k·e (mod Z^{n+1})`, if `a/d ∈ N`.
    pub fn residue_of(&self, numerators: &[i64]) -> Option<u64> {
        let d = self.denominator() as i64;
        let w = self.weights.given();
        (0..d)
            .find(|&k| {
                numerators
                    .iter()
                    .zip(w)
                    .all(|(&a, &wi)| (a - k * wi as i64).rem_euclid(d) == 0)
            })
            .map(|k| k as u64)
    }

    pub fn contains(&self, numerators: &[i64]) -> bool {
        self.residue_of(numerators).is_some()
    }

    /// `l(a/d) = Σ a_i / d` when integral.
    pub fn level(&self, numerators: &[i64]) -> Option<i64> {
        let d = self.denominator() as i64;
        let s: i64 = numerators.iter().sum();
        (s % d == 0).then_some(s / d)
    }

    /// Calls `visit` on every point of the face's relative interior at level `k`.
    fn for_each_point(
        &self,
        face: &SimplexFace,
        k: u64,
        budget: &VisitBudget,
        mut visit: impl FnMut(&[i64]),
    ) -> Result<()> {
        let d = self.denominator();
        let w = self.weights.given();
        let mut point = vec![0i64; w.len()];
        for r in 0..d {
            budget.charge(1)?;
            let rep: Vec<u64> = w.iter().map(|&wi| (r * wi) % d).collect();
            if (0..w.len()).any(|i| !face.contains(i) && rep[i] != 0) {
                continue;
            }
            let base: u64 = rep.iter().sum::<u64>() / d;
            let zeros = face.vertices.iter().filter(|&&i| rep[i] == 0).count() as u64;
            let Some(free) = k.checked_sub(base + zeros) else {
                continue;
            };
            // Translate: 1 on zero coordinates of the face, then distribute `free`.
            let mut translate = vec![0u64; w.len()];
            for &i in &face.vertices {
                translate[i] = u64::from(rep[i] == 0);
            }
            distribute(&face.vertices, free, &mut translate, budget, &mut |t| {
                for i in 0..w.len() {
                    point[i] = rep[i] as i64 + (t[i] * d) as i64;
                }
                visit(&point);
            })?;
        }
        Ok(())
    }
}

/// Enumerates every way to add `total` units over `slots`.
fn distribute(
    slots: &[usize],
    total: u64,
    acc: &mut [u64],
    budget: &VisitBudget,
    visit: &mut dyn FnMut(&[u64]),
) -> Result<()> {
    match slots {
        [] => {
            if total == 0 {
                budget.charge(1)?;
                visit(acc);
            }
            Ok(())
        }
        [last] => {
            budget.charge(1)?;
            acc[*last] += total;
            visit(acc);
            acc[*last] -= total;
            Ok(())
        }
        [first, rest @ ..] => {
            for take in 0..=total {
                acc[*first] += take;
                let res = distribute(rest, total - take, acc, budget, visit);
                acc[*first] -= take;
                res?;
            }
            Ok(())
        }
    }
}

/// Face of `Δ` spanned by `{e_i : i ∈ vertices}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexFace {
    vertices: Vec<usize>,
}

impl SimplexFace {
    /// Panics on an empty vertex set.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "a face needs at least one vertex");
        vertices.sort_unstable();
        vertices.dedup();
        SimplexFace { vertices }
    }

    pub fn full(dim: usize) -> Self {
        SimplexFace::new((0..=dim).collect())
    }

    /// Facet opposite vertex `i`.
    pub fn facet(dim: usize, i: usize) -> Self {
        SimplexFace::new((0..=dim).filter(|&j| j != i).collect())
    }

    /// All nonempty faces of the `dim`-simplex, ordered by bitmask.
    pub fn all(dim: usize) -> Vec<SimplexFace> {
        let m = dim + 1;
        (1u64..(1 << m))
            .map(|mask| SimplexFace::new((0..m).filter(|&i| mask >> i & 1 == 1).collect()))
            .collect()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn contains(&self, i: usize) -> bool {
        self.vertices.binary_search(&i).is_ok()
    }
}

/// `ℓ*(kΓ)`: lattice points strictly inside the `k`-th dilate of the face.
pub fn strict_count(
    ctx: &LatticeContext,
    face: &SimplexFace,
    k: u64,
    budget: &VisitBudget,
) -> Result<u64> {
    let mut count = 0;
    ctx.for_each_point(face, k, budget, |_| count += 1)?;
    Ok(count)
}

/// Strict counts and Ehrhart numerator of one face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartPolynomialData {
    pub face: SimplexFace,
    /// `ℓ*(kΓ)` for `k = 0..=dim+1`.
    pub strict_counts: Vec<u64>,
    /// `φ_1..φ_{dim+1}` with `P_Γ(t) = (1−t)^{dim+1} L*_Γ(t) = Σ φ_k t^k`.
    pub phis: Vec<i64>,
}

impl EhrhartPolynomialData {
    /// `φ_k`, zero outside `1..=dim+1`.
    pub fn phi(&self, k: i64) -> i64 {
        if k < 1 {
            return 0;
        }
        self.phis.get(k as usize - 1).copied().unwrap_or(0)
    }
}

/// Coefficient of `t^j` in `(1−t)^m · Σ counts[k] t^k`.
fn convolve_coefficient(counts: &[u64], m: usize, j: usize) -> i64 {
    let mut binom: i64 = 1;
    let mut acc = 0i64;
    for i in 0..=j.min(m) {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        acc += sign * binom * counts[j - i] as i64;
        binom = binom * (m - i) as i64 / (i + 1) as i64;
    }
    acc
}

pub fn ehrhart_data(
    ctx: &LatticeContext,
    face: &SimplexFace,
    budget: &VisitBudget,
) -> Result<EhrhartPolynomialData> {
    let m = face.dim() + 1;
    // One level past the degree bound, to check that the series truncates.
    let counts = (0..=m as u64 + 1)
        .map(|k| strict_count(ctx, face, k, budget))
        .collect::<Result<Vec<u64>>>()?;
    assert_eq!(
        convolve_coefficient(&counts, m, 0),
        0,
        "P_Γ has no constant term"
    );
    assert_eq!(
        convolve_coefficient(&counts, m, m + 1),
        0,
        "(1−t)^{m} L*(t) must be a polynomial of degree ≤ {m}"
    );
    let phis = (1..=m)
        .map(|j| convolve_coefficient(&counts, m, j))
        .collect();
    Ok(EhrhartPolynomialData {
        face: face.clone(),
        strict_counts: counts[..=m].to_vec(),
        phis,
    })
}

/// `h^{n−k,k−1} = Σ_Γ (−1)^{codim Γ} φ_{k − codim Γ}(Γ)` for `k = 1..=n`.
pub fn hodge_via_inclusion_exclusion(
    ctx: &LatticeContext,
    budget: &VisitBudget,
) -> Result<Vec<i64>> {
    let n = ctx.dim();
    let data = SimplexFace::all(n)
        .par_iter()
        .map(|face| ehrhart_data(ctx, face, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok((1..=n as i64)
        .map(|k| {
            data.iter()
                .map(|e| {
                    let codim = (n - e.face.dim()) as i64;
                    let sign = if codim % 2 == 0 { 1 } else { -1 };
                    sign * e.phi(k - codim)
                })
                .sum()
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polytope {
    /// The simplex `Δ ⊂ N_1`.
    Simplex,
    /// The dual simplex `Δ* = {m : ⟨m, e_i⟩ ≥ −1}` in `M = Hom(N_1, Z)`.
    Dual,
}

/// Lattice points strictly inside `Δ` or `Δ*`.
///
/// For `Δ`, points are numerator vectors over `d` (the origin `e` is
/// included). For `Δ*`, a point `m` is given by the integers
/// `x_i = ⟨m, e_i − e⟩`, which satisfy `Σ w_i x_i = 0`.
pub fn interior_points(
    ctx: &LatticeContext,
    which: Polytope,
    budget: &VisitBudget,
) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    match which {
        Polytope::Simplex => {
            ctx.for_each_point(&SimplexFace::full(ctx.dim()), 1, budget, |p| {
                out.push(p.to_vec())
            })?;
        }
        Polytope::Dual => {
            for_each_dual_point(ctx, budget, |x| {
                if x.iter().all(|&xi| xi > -1) {
                    out.push(x.to_vec());
                }
            })?;
        }
    }
    out.sort();
    Ok(out)
}

/// Number of lattice points of `Δ*`.
pub fn dual_point_count(ctx: &LatticeContext, budget: &VisitBudget) -> Result<u64> {
    let mut count = 0;
    for_each_dual_point(ctx, budget, |_| count += 1)?;
    Ok(count)
}

/// Visits `x ∈ Z^{n+1}` with `x_i ≥ −1` and `Σ w_i x_i = 0`; each coordinate
/// is then at most `(d − w_i)/w_i`, so the search box is finite.
fn for_each_dual_point(
    ctx: &LatticeContext,
    budget: &VisitBudget,
    mut visit: impl FnMut(&[i64]),
) -> Result<()> {
    fn rec(
        w: &[u64],
        i: usize,
        remaining: u64,
        x: &mut Vec<i64>,
        budget: &VisitBudget,
        visit: &mut dyn FnMut(&[i64]),
    ) -> Result<()> {
        budget.charge(1)?;
        if i == w.len() {
            if remaining == 0 {
                visit(x);
            }
            return Ok(());
        }
        // y_i = x_i + 1 ≥ 0 with Σ w_i y_i = d.
        for y in 0..=remaining / w[i] {
            x.push(y as i64 - 1);
            rec(w, i + 1, remaining - y * w[i], x, budget, visit)?;
            x.pop();
        }
        Ok(())
    }
    let w = ctx.weights.given();
    rec(
        w,
        0,
        ctx.denominator(),
        &mut Vec::with_capacity(w.len()),
        budget,
        &mut visit,
    )
}

/// Points `v ∈ N` with `l(v) = 1`, `v_i = 0` and the other coordinates
/// positive: the interior points of the facet opposite vertex `i` at level 1.
pub fn facet_interior_count(ctx: &LatticeContext, i: usize, budget: &VisitBudget) -> Result<u64> {
    strict_count(ctx, &SimplexFace::facet(ctx.dim(), i), 1, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(raw: &[u64]) -> LatticeContext {
        LatticeContext::new(&WeightTuple::new(raw).unwrap())
    }

    /// Oracle: scan every numerator vector with `0 ≤ a_i ≤ k·d` directly.
    fn brute_strict_count(c: &LatticeContext, face: &SimplexFace, k: u64) -> u64 {
        let d = c.denominator() as i64;
        let m = c.dim() + 1;
        let top = k as i64 * d;
        let mut count = 0;
        let mut a = vec![0i64; m];
        loop {
            let ok = a.iter().sum::<i64>() == top
                && (0..m).all(|i| {
                    if face.contains(i) {
                        a[i] > 0
                    } else {
                        a[i] == 0
                    }
                })
                && c.contains(&a);
            count += u64::from(ok);
            let mut i = 0;
            while i < m {
                a[i] += 1;
                if a[i] <= top {
                    break;
                }
                a[i] = 0;
                i += 1;
            }
            if i == m {
                return count;
            }
        }
    }

    #[test]
    fn strict_count_examples() {
        let b = VisitBudget::unlimited();
        let p3 = ctx(&[1, 1, 1, 1]);
        assert_eq!(strict_count(&p3, &SimplexFace::full(3), 1, &b).unwrap(), 1);
        let c = ctx(&[1, 1, 3]);
        assert_eq!(strict_count(&c, &SimplexFace::full(2), 1, &b).unwrap(), 2);
        for face in SimplexFace::all(2) {
            assert_eq!(strict_count(&c, &face, 0, &b).unwrap(), 0);
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let b = VisitBudget::unlimited();
        for w in [
            &[1u64, 1, 3][..],
            &[1, 2, 3],
            &[2, 3, 5],
            &[1, 1, 1, 1],
            &[1, 2, 2, 3],
        ] {
            let c = ctx(w);
            for face in SimplexFace::all(c.dim()) {
                for k in 0..=3 {
                    assert_eq!(
                        strict_count(&c, &face, k, &b).unwrap(),
                        brute_strict_count(&c, &face, k),
                        "{w:?} {face:?} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn ehrhart_examples() {
        let b = VisitBudget::unlimited();
        // ℓ*(kΔ) for P^3 at k = 0..4; also checked against the brute-force scan above.
        let e = ehrhart_data(&ctx(&[1, 1, 1, 1]), &SimplexFace::full(3), &b).unwrap();
        assert_eq!(e.strict_counts, vec![0, 1, 5, 15, 35]);
        assert_eq!(e.phis, vec![1, 1, 1, 1]);

        let e = ehrhart_data(&ctx(&[1, 1, 3]), &SimplexFace::full(2), &b).unwrap();
        assert_eq!(e.phis, vec![2, 2, 1]);

        for i in 0..4 {
            let e = ehrhart_data(&ctx(&[1, 5, 6, 8]), &SimplexFace::new(vec![i]), &b).unwrap();
            assert_eq!(e.strict_counts, vec![0, 1]);
            assert_eq!(e.phis, vec![1]);
        }
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let b = VisitBudget::unlimited();
        assert_eq!(
            hodge_via_inclusion_exclusion(&ctx(&[1, 1, 1, 1]), &b).unwrap(),
            vec![1, 1, 1]
        );
        assert_eq!(
            hodge_via_inclusion_exclusion(&ctx(&[1, 5, 6, 8]), &b).unwrap(),
            vec![1, 10, 1]
        );
        assert_eq!(
            hodge_via_inclusion_exclusion(&ctx(&[1, 2, 3]), &b).unwrap(),
            vec![1, 1]
        );
    }

    #[test]
    fn interior_point_examples() {
        let b = VisitBudget::unlimited();
        let pts = interior_points(&ctx(&[1, 1, 3]), Polytope::Simplex, &b).unwrap();
        assert_eq!(pts, vec![vec![1, 1, 3], vec![2, 2, 1]]);
        let pts = interior_points(&ctx(&[1, 5, 6, 8]), Polytope::Simplex, &b).unwrap();
        assert_eq!(pts, vec![vec![1, 5, 6, 8]]);
        let pts = interior_points(&ctx(&[1, 1, 1, 1]), Polytope::Dual, &b).unwrap();
        assert_eq!(pts, vec![vec![0, 0, 0, 0]]);
        // Δ* of P^3: the 35 quartic monomials.
        assert_eq!(dual_point_count(&ctx(&[1, 1, 1, 1]), &b).unwrap(), 35);
    }

    #[test]
    fn facet_counts() {
        let b = VisitBudget::unlimited();
        assert_eq!(facet_interior_count(&ctx(&[1, 5, 6, 8]), 3, &b).unwrap(), 1);
        assert_eq!(facet_interior_count(&ctx(&[1, 1, 1, 1]), 3, &b).unwrap(), 0);
        assert_eq!(facet_interior_count(&ctx(&[1, 2, 3]), 2, &b).unwrap(), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let b = VisitBudget::new(50);
        let err = hodge_via_inclusion_exclusion(&ctx(&[1, 5, 6, 8]), &b).unwrap_err();
        assert!(err.is_resource_limit());
    }

    #[test]
    fn membership_and_level() {
        let c = ctx(&[1, 5, 6, 8]);
        assert_eq!(c.residue_of(&[1, 5, 6, 8]), Some(1));
        assert_eq!(c.residue_of(&[5, 5, 10, 0]), Some(5));
        assert_eq!(c.residue_of(&[1, 0, 0, 0]), None);
        assert_eq!(c.level(&[1, 5, 6, 8]), Some(1));
        assert_eq!(c.level(&[1, 0, 0, 0]), None);
    }
}
