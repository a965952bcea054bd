//! Symmetric Cantor sets with ratio sequences `0 < ξ_k < 1/2`.
//!
//! Stage `k` of the construction keeps `2^k` closed intervals of common
//! length `ξ₁⋯ξ_k` inside `[0,1]`; stage `k` removes from each interval
//! of stage `k−1` a central open gap of relative length `1 − 2ξ_k`.
//!
//! A sequence is given as a finite prefix plus an optional closed-form
//! tail `ξ_{p+j} = (1/2)(1 − c·q^{j−1})`, `j = 1, 2, …` with rational
//! `0 < c < 1` and `0 < q < 1`. The tail makes measure bounds certifiable:
//! the infinite product `∏_{j>n}(1 − c q^{j−1})` is at least
//! `1 − c q^n/(1−q)`, a rational number.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{rat, Rational};
use crate::setalg::{BoxSet, SetAlgError};

/// Measure threshold above which the difference set of a unit-scale
/// symmetric Cantor set is the full interval `(-1,1)`.
pub fn full_interval_threshold() -> Rational {
    rat(4, 5)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CantorError {
    #[error("ratio ξ_{index} = {value} is outside (0, 1/2)")]
    RatioOutOfRange { index: usize, value: String },
    #[error("tail family needs 0 < c < 1 and 0 < q < 1, got c = {c}, q = {q}")]
    InvalidTail { c: String, q: String },
    #[error("stage {k} exceeds the finite prefix of length {prefix_len} and no tail family is given")]
    StageBeyondPrefix { k: usize, prefix_len: usize },
    #[error("stage {0} is too deep for explicit construction")]
    StageTooDeep(usize),
    #[error("positive measure of the tail cannot be certified: no tail family is given")]
    NoTailFamily,
    #[error("enclosure width must be positive")]
    TolNotPositive,
    #[error("overlap report needs a removal step, n = 0 has none")]
    NoRemovalStep,
    #[error("gap/interval ratio must satisfy d_n < ℓ_n, got d = {d}, ℓ = {ell}")]
    GapNotSmaller { d: String, ell: String },
    #[error("subdivision count M_{index} = {value} must be at least 4")]
    SubdivisionTooSmall { index: usize, value: i64 },
    #[error("stage {n} exceeds the subdivision schedule of length {len}")]
    StageBeyondSchedule { n: usize, len: usize },
    #[error("2D stage would have {0} cells, over the construction limit")]
    TooManyCells(u64),
    #[error("levels must be at least 1")]
    BadLevels,
    #[error("shrink must lie strictly between 0 and 1, got {0}")]
    BadShrink(String),
    #[error(transparent)]
    SetAlg(#[from] SetAlgError),
}

/// Closed-form tail `ξ_{p+j} = (1/2)(1 − c·q^{j−1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailFamily {
    pub c: Rational,
    pub q: Rational,
}

/// Defining data of a symmetric Cantor set: a finite prefix of ratios and
/// an optional closed-form tail. Without a tail the construction is the
/// finite stage `E_p` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSequence {
    prefix: Vec<Rational>,
    tail: Option<TailFamily>,
}

impl RatioSequence {
    pub fn new(prefix: Vec<Rational>, tail: Option<TailFamily>) -> Result<Self, CantorError> {
        let half = rat(1, 2);
        for (i, xi) in prefix.iter().enumerate() {
            if !(xi > &Rational::zero() && xi < &half) {
                return Err(CantorError::RatioOutOfRange {
                    index: i + 1,
                    value: xi.to_string(),
                });
            }
        }
        if let Some(t) = &tail {
            let ok = t.c > Rational::zero()
                && t.c < Rational::one()
                && t.q > Rational::zero()
                && t.q < Rational::one();
            if !ok {
                return Err(CantorError::InvalidTail {
                    c: t.c.to_string(),
                    q: t.q.to_string(),
                });
            }
        }
        Ok(RatioSequence { prefix, tail })
    }

    pub fn constant(xi: Rational, len: usize) -> Result<Self, CantorError> {
        RatioSequence::new(vec![xi; len], None)
    }

    pub fn prefix(&self) -> &[Rational] {
        &self.prefix
    }

    pub fn tail(&self) -> Option<&TailFamily> {
        self.tail.as_ref()
    }

    /// `ξ_k`, 1-based.
    pub fn xi(&self, k: usize) -> Result<Rational, CantorError> {
        assert!(k >= 1, "ratio indices are 1-based");
        if k <= self.prefix.len() {
            return Ok(self.prefix[k - 1].clone());
        }
        match &self.tail {
            None => Err(CantorError::StageBeyondPrefix {
                k,
                prefix_len: self.prefix.len(),
            }),
            Some(t) => {
                let j = k - self.prefix.len(); // j ≥ 1
                let factor = &t.c * rat_pow(&t.q, (j - 1) as u32);
                Ok(rat(1, 2) * (Rational::one() - factor))
            }
        }
    }

    /// The shifted sequence `(ξ_{k+1}, ξ_{k+2}, …)`.
    pub fn shifted(&self, k: usize) -> Result<RatioSequence, CantorError> {
        let p = self.prefix.len();
        if k <= p {
            return RatioSequence::new(self.prefix[k..].to_vec(), self.tail.clone());
        }
        match &self.tail {
            None => Err(CantorError::StageBeyondPrefix { k, prefix_len: p }),
            Some(t) => RatioSequence::new(
                Vec::new(),
                Some(TailFamily {
                    c: &t.c * rat_pow(&t.q, (k - p) as u32),
                    q: t.q.clone(),
                }),
            ),
        }
    }

    /// Certified rational lower bound for `inf_n 2^n ξ_{k+1}⋯ξ_{k+n}`,
    /// the tail measure of the construction restricted past index `k`.
    /// `None` when the bound degenerates to ≤ 0.
    fn tail_measure_lower_bound(&self, k: usize) -> Result<Option<Rational>, CantorError> {
        let p = self.prefix.len();
        let tail = match &self.tail {
            None => return Err(CantorError::NoTailFamily),
            Some(t) => t,
        };
        // prefix part, exact
        let mut prod = Rational::one();
        for i in (k + 1)..=p {
            prod *= rat(2, 1) * self.xi(i)?;
        }
        // tail part: 1 − Σ_{j>max(0,k−p)} c q^{j−1} = 1 − c q^{k−p} / (1−q)
        let skip = k.saturating_sub(p) as u32;
        let tail_sum = &tail.c * rat_pow(&tail.q, skip) / (Rational::one() - &tail.q);
        let bound = Rational::one() - tail_sum;
        if bound <= Rational::zero() {
            return Ok(None);
        }
        Ok(Some(prod * bound))
    }
}

fn rat_pow(r: &Rational, e: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..e {
        out *= r;
    }
    out
}

const MAX_STAGE: usize = 24;

/// Stage `k` of the construction: `2^k` intervals of length `ξ₁⋯ξ_k`.
#[derive(Debug, Clone)]
pub struct CantorStage {
    pub k: usize,
    /// `r_j = ξ₁⋯ξ_{j−1}(1 − ξ_j)` for `j = 1..=k`.
    pub lengths: Vec<Rational>,
    /// The `2^k` left endpoints `T_k`, sorted.
    pub offsets: Vec<Rational>,
    /// Common interval length `ξ₁⋯ξ_k`.
    pub cell_length: Rational,
    pub set: BoxSet,
}

/// Build stage `k`; `E_0 = [0,1]`.
pub fn stage(xi: &RatioSequence, k: usize) -> Result<CantorStage, CantorError> {
    if k > MAX_STAGE {
        return Err(CantorError::StageTooDeep(k));
    }
    let mut lengths = Vec::with_capacity(k);
    let mut offsets = vec![Rational::zero()];
    let mut cell = Rational::one();
    for j in 1..=k {
        let x = xi.xi(j)?;
        let r = &cell * (Rational::one() - &x);
        let mut next = Vec::with_capacity(offsets.len() * 2);
        for t in &offsets {
            next.push(t.clone());
            next.push(t + &r);
        }
        offsets = next;
        lengths.push(r);
        cell *= &x;
    }
    offsets.sort();
    let segments: Vec<(Rational, Rational)> = offsets
        .iter()
        .map(|t| (t.clone(), t + &cell))
        .collect();
    let set = BoxSet::intervals(&segments)?;
    Ok(CantorStage {
        k,
        lengths,
        offsets,
        cell_length: cell,
        set,
    })
}

/// Rational enclosure `[lo, hi]` of the measure of the full construction,
/// of width at most `tol`. Without a tail the value is exact: the
/// construction stops at the prefix and `m(E_p) = 2^p ξ₁⋯ξ_p`.
pub fn measure_limit(
    xi: &RatioSequence,
    tol: &Rational,
) -> Result<(Rational, Rational), CantorError> {
    if tol <= &Rational::zero() {
        return Err(CantorError::TolNotPositive);
    }
    let p = xi.prefix.len();
    let mut prefix_prod = Rational::one();
    for i in 1..=p {
        prefix_prod *= rat(2, 1) * xi.xi(i)?;
    }
    let tail = match &xi.tail {
        None => return Ok((prefix_prod.clone(), prefix_prod)),
        Some(t) => t,
    };
    // hi: partial products are nonincreasing; lo: geometric tail bound.
    let one = Rational::one();
    let mut partial = Rational::one();
    let mut qpow = Rational::one(); // q^n
    let mut n: u32 = 0;
    loop {
        let hi = &prefix_prod * &partial;
        let tail_sum = &tail.c * &qpow / (&one - &tail.q);
        let tail_low = &one - tail_sum;
        let lo = if tail_low <= Rational::zero() {
            Rational::zero()
        } else {
            &hi * tail_low
        };
        if &hi - &lo <= *tol {
            return Ok((lo, hi));
        }
        partial *= &one - &tail.c * &qpow;
        qpow *= &tail.q;
        n += 1;
        debug_assert!(n < 100_000, "geometric tail failed to converge");
    }
}

/// Result of the certified tail search.
#[derive(Debug, Clone)]
pub struct TailIndex {
    /// Smallest index past which the tail measure is certified ≥ 4/5.
    pub k: usize,
    /// The certified rational lower bound at that index.
    pub certified_lower_bound: Rational,
}

/// Smallest `k` such that the rational tail bound certifies
/// `inf_n 2^n ξ_{k+1}⋯ξ_{k+n} ≥ 4/5`. Errors when no tail family exists:
/// then positive measure of the construction cannot be certified.
pub fn tail_index(xi: &RatioSequence) -> Result<TailIndex, CantorError> {
    let threshold = full_interval_threshold();
    let mut k = 0usize;
    loop {
        if let Some(bound) = xi.tail_measure_lower_bound(k)? {
            if bound >= threshold {
                return Ok(TailIndex {
                    k,
                    certified_lower_bound: bound,
                });
            }
        }
        k += 1;
        debug_assert!(
            k <= xi.prefix.len() + 100_000,
            "tail bound failed to reach the threshold"
        );
    }
}

/// The exact essential difference set of the full construction.
///
/// Past a certified index `k` the difference set stops changing, so
/// `Δ(E) = Δ(E_k) = T_k − T_k + ξ₁⋯ξ_k·(−1,1)`, a finite union of open
/// intervals. Returns the certified `k` and `Δ(E_k)`. The stage set
/// `E_k` itself is then a packing region for every deeper stage and for
/// `E`, with strictly larger measure and `E ⊆ E_k`.
pub fn delta_exact(xi: &RatioSequence) -> Result<(usize, BoxSet), CantorError> {
    let t = tail_index(xi)?;
    let st = stage(xi, t.k)?;
    Ok((t.k, st.set.essential_difference()))
}

/// Quantities of the stage-`n` removal step.
#[derive(Debug, Clone)]
pub struct OverlapReport {
    pub n: usize,
    /// Interval length `ℓ_n = ξ₁⋯ξ_n` of stage `n`.
    pub ell: Rational,
    /// Gap length `d_n = ξ₁⋯ξ_{n−1}(1 − 2ξ_n)` removed at step `n`.
    pub d: Rational,
    /// Measure of the removed union `A_n`.
    pub m_a: Rational,
    /// Measure of stage `n`.
    pub m_e: Rational,
    /// `(1/2 − d_n/(2ℓ_n))·m(E_n)`: the quantitative lower bound that
    /// contradicts a weak tiling of the complement as `n` grows.
    pub lower_bound: Rational,
}

pub fn overlap_report(xi: &RatioSequence, n: usize) -> Result<OverlapReport, CantorError> {
    if n == 0 {
        return Err(CantorError::NoRemovalStep);
    }
    let mut prod_prev = Rational::one(); // ξ₁⋯ξ_{n−1}
    for i in 1..n {
        prod_prev *= xi.xi(i)?;
    }
    let xn = xi.xi(n)?;
    let ell = &prod_prev * &xn;
    let d = &prod_prev * (Rational::one() - rat(2, 1) * &xn);
    let m_e = rat_pow(&rat(2, 1), n as u32) * &ell;
    let ratio = &d / (rat(2, 1) * &ell);
    let m_a = &ratio * &m_e;
    debug_assert_eq!(m_a, rat_pow(&rat(2, 1), (n - 1) as u32) * &d);
    let lower_bound = (rat(1, 2) - ratio) * &m_e;
    Ok(OverlapReport {
        n,
        ell,
        d,
        m_a,
        m_e,
        lower_bound,
    })
}

/// Both sides of the stage-`n` overlap inequality at a shift `t`:
/// `((ℓ_n − d_n)/d_n)·m((E_n+t) ∩ A_n) ≤ m((E_n+t) ∩ E_n)`.
#[derive(Debug, Clone)]
pub struct CrucialInequality {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

/// Evaluate the overlap inequality exactly. A `false` result would
/// indicate an implementation bug, not a property of the input.
pub fn crucial_inequality_check(
    xi: &RatioSequence,
    n: usize,
    t: &Rational,
) -> Result<CrucialInequality, CantorError> {
    if n == 0 {
        return Err(CantorError::NoRemovalStep);
    }
    let report = overlap_report(xi, n)?;
    if report.d >= report.ell {
        return Err(CantorError::GapNotSmaller {
            d: report.d.to_string(),
            ell: report.ell.to_string(),
        });
    }
    let e_n = stage(xi, n)?.set;
    let e_prev = stage(xi, n - 1)?.set;
    let a_n = e_prev.difference(&e_n)?;
    let shifted = e_n.translate(std::slice::from_ref(t))?;
    let coeff = (&report.ell - &report.d) / &report.d;
    let lhs = coeff * shifted.intersection_measure(&a_n)?;
    let rhs = shifted.intersection_measure(&e_n)?;
    let holds = lhs <= rhs;
    Ok(CrucialInequality { lhs, rhs, holds })
}

const MAX_2D_CELLS: u64 = 200_000;

/// Stage `n` of the planar construction: subdivide every square of the
/// previous stage into `M_n × M_n` cells and delete the cell containing
/// the center (ties broken toward lower coordinates).
pub fn cantor2d_stage(subdivisions: &[i64], n: usize) -> Result<BoxSet, CantorError> {
    for (i, m) in subdivisions.iter().enumerate() {
        if *m < 4 {
            return Err(CantorError::SubdivisionTooSmall {
                index: i + 1,
                value: *m,
            });
        }
    }
    if n > subdivisions.len() {
        return Err(CantorError::StageBeyondSchedule {
            n,
            len: subdivisions.len(),
        });
    }
    let mut count: u64 = 1;
    for m in &subdivisions[..n] {
        count = count.saturating_mul((*m as u64) * (*m as u64) - 1);
        if count > MAX_2D_CELLS {
            return Err(CantorError::TooManyCells(count));
        }
    }

    // integer cell coordinates at resolution ∏ M_j
    let mut cells: Vec<(i64, i64)> = vec![(0, 0)];
    let mut denom = Rational::one();
    for m in &subdivisions[..n] {
        let m = *m;
        let removed = (m - 1) / 2;
        let mut next = Vec::with_capacity(cells.len() * ((m * m - 1) as usize));
        for (x, y) in &cells {
            for a in 0..m {
                for b in 0..m {
                    if a == removed && b == removed {
                        continue;
                    }
                    next.push((x * m + a, y * m + b));
                }
            }
        }
        cells = next;
        denom *= Rational::from_integer(m.into());
    }
    let side = Rational::one() / denom;
    let boxes = cells
        .into_iter()
        .map(|(x, y)| {
            let x = Rational::from_integer(x.into());
            let y = Rational::from_integer(y.into());
            crate::setalg::AxisBox::new(
                vec![&x * &side, &y * &side],
                vec![(&x + Rational::one()) * &side, (&y + Rational::one()) * &side],
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BoxSet::new(2, boxes)?)
}

/// A finite-stage partition of `[0,1]` into fat-Cantor pieces.
#[derive(Debug, Clone)]
pub struct FatCantorTiling {
    /// Pairwise a.e.-disjoint sets inside `[0,1]`; piece `n` is destined
    /// for the translate by `n` in the unit tiling surrogate.
    pub pieces: Vec<BoxSet>,
    /// `1 − Σ m(pieces)`, equal to `shrink^levels`.
    pub residual: Rational,
}

/// Greedy fat-Cantor filling of `[0,1]`: each level places a two-stage
/// symmetric Cantor set of relative measure `1 − shrink` into every gap
/// left by the previous levels, so the uncovered measure decays
/// geometrically.
pub fn fat_cantor_tiler(levels: usize, shrink: &Rational) -> Result<FatCantorTiling, CantorError> {
    if levels == 0 {
        return Err(CantorError::BadLevels);
    }
    if !(shrink > &Rational::zero() && shrink < &Rational::one()) {
        return Err(CantorError::BadShrink(shrink.to_string()));
    }
    // two-stage unit Cantor set of measure exactly 1 − shrink
    let xi1 = rat(1, 2) * (Rational::one() - shrink / rat(2, 1));
    let xi2 = (Rational::one() - shrink) / (rat(4, 1) * &xi1);
    let seq = RatioSequence::new(vec![xi1, xi2], None)?;
    let unit_piece = stage(&seq, 2)?.set;
    debug_assert_eq!(unit_piece.measure(), Rational::one() - shrink);

    let mut pieces = Vec::with_capacity(levels);
    let mut gaps: Vec<(Rational, Rational)> = vec![(Rational::zero(), Rational::one())];
    for _ in 0..levels {
        let mut level_boxes = BoxSet::empty(1);
        let mut next_gaps = Vec::with_capacity(gaps.len() * 3);
        for (a, b) in &gaps {
            let len = b - a;
            let placed = unit_piece.scale(&len)?.translate(std::slice::from_ref(a))?;
            let inside = BoxSet::interval(a.clone(), b.clone())?
                .difference(&placed)?
                .normalize();
            for bx in inside.boxes() {
                next_gaps.push((bx.lo()[0].clone(), bx.hi()[0].clone()));
            }
            level_boxes = level_boxes.union(&placed)?;
        }
        pieces.push(level_boxes.normalize());
        gaps = next_gaps;
    }
    let covered: Rational = pieces.iter().map(|p| p.measure()).sum();
    let residual = Rational::one() - covered;
    Ok(FatCantorTiling { pieces, residual })
}
