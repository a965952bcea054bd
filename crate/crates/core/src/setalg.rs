//! Measure-theoretic algebra of finite unions of axis-aligned rational
//! boxes in dimension 1 and 2.
//!
//! Sets are treated up to null sets: boxes canonicalize to half-open
//! `[lo, hi)` form, overlapping or touching pieces merge, and every
//! comparison (`ae_eq`, `is_subset_ae`) is a statement about Lebesgue
//! measure, not topology. Difference sets carry an `open` flag that only
//! affects display.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::rational::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetAlgError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("unsupported dimension {0}, expected 1 or 2")]
    UnsupportedDimension(usize),
    #[error("box has empty interior: lo {lo} is not strictly below hi {hi}")]
    EmptyBox { lo: String, hi: String },
    #[error("expected a point with {expected} coordinates, got {got}")]
    PointArity { expected: usize, got: usize },
    #[error("scale factor must be nonzero")]
    ZeroScale,
}

/// Axis-aligned box with nonempty interior; `lo[i] < hi[i]` in every coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisBox {
    lo: Vec<Rational>,
    hi: Vec<Rational>,
}

impl AxisBox {
    pub fn new(lo: Vec<Rational>, hi: Vec<Rational>) -> Result<Self, SetAlgError> {
        if lo.len() != hi.len() {
            return Err(SetAlgError::DimensionMismatch {
                left: lo.len(),
                right: hi.len(),
            });
        }
        if lo.is_empty() || lo.len() > 2 {
            return Err(SetAlgError::UnsupportedDimension(lo.len()));
        }
        for (l, h) in lo.iter().zip(&hi) {
            if l >= h {
                return Err(SetAlgError::EmptyBox {
                    lo: format_rational(l),
                    hi: format_rational(h),
                });
            }
        }
        Ok(AxisBox { lo, hi })
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[Rational] {
        &self.lo
    }

    pub fn hi(&self) -> &[Rational] {
        &self.hi
    }

    pub fn volume(&self) -> Rational {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| h - l)
            .product()
    }

    fn translated(&self, t: &[Rational]) -> AxisBox {
        AxisBox {
            lo: self.lo.iter().zip(t).map(|(x, d)| x + d).collect(),
            hi: self.hi.iter().zip(t).map(|(x, d)| x + d).collect(),
        }
    }

    /// Intersection as a box, or `None` when the interiors are disjoint.
    fn intersect(&self, other: &AxisBox) -> Option<AxisBox> {
        let mut lo = Vec::with_capacity(self.dim());
        let mut hi = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let l = self.lo[i].clone().max(other.lo[i].clone());
            let h = self.hi[i].clone().min(other.hi[i].clone());
            if l >= h {
                return None;
            }
            lo.push(l);
            hi.push(h);
        }
        Some(AxisBox { lo, hi })
    }

    fn contains_point(&self, p: &[Rational]) -> bool {
        self.lo
            .iter()
            .zip(&self.hi)
            .zip(p)
            .all(|((l, h), x)| l <= x && x < h)
    }
}

/// Finite union of boxes in a fixed dimension, compared up to null sets.
#[derive(Debug, Clone)]
pub struct BoxSet {
    dim: usize,
    boxes: Vec<AxisBox>,
    open: bool,
    normalized: bool,
}

impl BoxSet {
    pub fn new(dim: usize, boxes: Vec<AxisBox>) -> Result<Self, SetAlgError> {
        if dim == 0 || dim > 2 {
            return Err(SetAlgError::UnsupportedDimension(dim));
        }
        for b in &boxes {
            if b.dim() != dim {
                return Err(SetAlgError::DimensionMismatch {
                    left: dim,
                    right: b.dim(),
                });
            }
        }
        Ok(BoxSet {
            dim,
            boxes,
            open: false,
            normalized: false,
        })
    }

    pub fn empty(dim: usize) -> Self {
        BoxSet {
            dim,
            boxes: Vec::new(),
            open: false,
            normalized: true,
        }
    }

    /// 1D interval `[lo, hi]`.
    pub fn interval(lo: Rational, hi: Rational) -> Result<Self, SetAlgError> {
        Ok(BoxSet::new(1, vec![AxisBox::new(vec![lo], vec![hi])?])?)
    }

    /// 1D union of intervals.
    pub fn intervals(segments: &[(Rational, Rational)]) -> Result<Self, SetAlgError> {
        let boxes = segments
            .iter()
            .map(|(l, h)| AxisBox::new(vec![l.clone()], vec![h.clone()]))
            .collect::<Result<Vec<_>, _>>()?;
        BoxSet::new(1, boxes)
    }

    /// 2D rectangle `[x0, x1] × [y0, y1]`.
    pub fn rect(x0: Rational, x1: Rational, y0: Rational, y1: Rational) -> Result<Self, SetAlgError> {
        Ok(BoxSet::new(
            2,
            vec![AxisBox::new(vec![x0, y0], vec![x1, y1])?],
        )?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn boxes(&self) -> &[AxisBox] {
        &self.boxes
    }

    pub fn is_empty_set(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn is_open(&self) -> bool {
        self.open
    }

    pub fn mark_open(mut self) -> Self {
        self.open = true;
        self
    }

    /// Canonical form: pairwise-interior-disjoint boxes, touching pieces
    /// merged, ordered lexicographically by `lo`. Idempotent, and two sets
    /// that agree a.e. normalize to the identical box list.
    pub fn normalize(&self) -> BoxSet {
        if self.normalized {
            return self.clone();
        }
        let boxes = match self.dim {
            1 => normalize_1d(&self.boxes),
            2 => normalize_2d(&self.boxes),
            _ => unreachable!("dimension validated at construction"),
        };
        BoxSet {
            dim: self.dim,
            boxes,
            open: self.open,
            normalized: true,
        }
    }

    /// Lebesgue measure of the union.
    pub fn measure(&self) -> Rational {
        let n = self.normalize();
        n.boxes.iter().map(|b| b.volume()).sum()
    }

    /// Sum of the raw box volumes, ignoring overlaps.
    pub fn raw_volume_sum(&self) -> Rational {
        self.boxes.iter().map(|b| b.volume()).sum()
    }

    pub fn translate(&self, t: &[Rational]) -> Result<BoxSet, SetAlgError> {
        if t.len() != self.dim {
            return Err(SetAlgError::PointArity {
                expected: self.dim,
                got: t.len(),
            });
        }
        Ok(BoxSet {
            dim: self.dim,
            boxes: self.boxes.iter().map(|b| b.translated(t)).collect(),
            open: self.open,
            normalized: false,
        })
    }

    /// The reflection `-S`.
    pub fn negate(&self) -> BoxSet {
        let boxes = self
            .boxes
            .iter()
            .map(|b| AxisBox {
                lo: b.hi.iter().map(|x| -x).collect(),
                hi: b.lo.iter().map(|x| -x).collect(),
            })
            .collect();
        BoxSet {
            dim: self.dim,
            boxes,
            open: self.open,
            normalized: false,
        }
    }

    /// Dilation `c·S` for nonzero `c`.
    pub fn scale(&self, c: &Rational) -> Result<BoxSet, SetAlgError> {
        if c.is_zero() {
            return Err(SetAlgError::ZeroScale);
        }
        if c < &Rational::zero() {
            return self.negate().scale(&(-c));
        }
        let boxes = self
            .boxes
            .iter()
            .map(|b| AxisBox {
                lo: b.lo.iter().map(|x| x * c).collect(),
                hi: b.hi.iter().map(|x| x * c).collect(),
            })
            .collect();
        Ok(BoxSet {
            dim: self.dim,
            boxes,
            open: self.open,
            normalized: false,
        })
    }

    pub fn union(&self, other: &BoxSet) -> Result<BoxSet, SetAlgError> {
        self.check_dim(other)?;
        let mut boxes = self.boxes.clone();
        boxes.extend(other.boxes.iter().cloned());
        Ok(BoxSet {
            dim: self.dim,
            boxes,
            open: self.open && other.open,
            normalized: false,
        })
    }

    /// Half-open membership test. For difference-set boundary queries use
    /// `overlap_measure` instead; see `delta_contains` in this module.
    pub fn contains_point(&self, p: &[Rational]) -> Result<bool, SetAlgError> {
        if p.len() != self.dim {
            return Err(SetAlgError::PointArity {
                expected: self.dim,
                got: p.len(),
            });
        }
        Ok(self.boxes.iter().any(|b| b.contains_point(p)))
    }

    /// `m(S ∩ (S + t))`, exactly.
    pub fn overlap_measure(&self, t: &[Rational]) -> Result<Rational, SetAlgError> {
        if t.len() != self.dim {
            return Err(SetAlgError::PointArity {
                expected: self.dim,
                got: t.len(),
            });
        }
        let s = self.normalize();
        let mut total = Rational::zero();
        for b in &s.boxes {
            for c in &s.boxes {
                if let Some(i) = b.intersect(&c.translated(t)) {
                    total += i.volume();
                }
            }
        }
        Ok(total)
    }

    /// Essential difference set `Δ(S) = {t : m(S ∩ (S+t)) > 0}`.
    ///
    /// For interior-disjoint boxes `B_i` this is exactly
    /// `⋃_{i,j} int(B_i − B_j)`, an open, origin-symmetric, bounded set.
    pub fn essential_difference(&self) -> BoxSet {
        let s = self.normalize();
        if s.boxes.is_empty() {
            let mut e = BoxSet::empty(self.dim);
            e.open = true;
            return e;
        }
        let mut boxes = Vec::with_capacity(s.boxes.len() * s.boxes.len());
        for b in &s.boxes {
            for c in &s.boxes {
                let lo: Vec<Rational> = b.lo.iter().zip(&c.hi).map(|(l, h)| l - h).collect();
                let hi: Vec<Rational> = b.hi.iter().zip(&c.lo).map(|(h, l)| h - l).collect();
                boxes.push(AxisBox { lo, hi });
            }
        }
        let raw = BoxSet {
            dim: self.dim,
            boxes,
            open: true,
            normalized: false,
        };
        raw.normalize()
    }

    /// `m(S1 ∩ S2)`, exactly.
    pub fn intersection_measure(&self, other: &BoxSet) -> Result<Rational, SetAlgError> {
        self.check_dim(other)?;
        let a = self.normalize();
        let b = other.normalize();
        let mut total = Rational::zero();
        for x in &a.boxes {
            for y in &b.boxes {
                if let Some(i) = x.intersect(y) {
                    total += i.volume();
                }
            }
        }
        Ok(total)
    }

    /// Set difference `S1 \ S2` as a box union (a.e. semantics).
    pub fn difference(&self, other: &BoxSet) -> Result<BoxSet, SetAlgError> {
        self.check_dim(other)?;
        let a = self.normalize();
        let b = other.normalize();
        let boxes = match self.dim {
            1 => {
                let xs = diff_1d(&to_segments(&a.boxes, 0), &to_segments(&b.boxes, 0));
                xs.into_iter()
                    .map(|(l, h)| AxisBox {
                        lo: vec![l],
                        hi: vec![h],
                    })
                    .collect()
            }
            2 => diff_2d(&a.boxes, &b.boxes),
            _ => unreachable!(),
        };
        Ok(BoxSet {
            dim: self.dim,
            boxes,
            open: self.open,
            normalized: true,
        })
    }

    /// `m(S1 △ S2)`, exactly.
    pub fn symdiff_measure(&self, other: &BoxSet) -> Result<Rational, SetAlgError> {
        self.check_dim(other)?;
        let inter = self.intersection_measure(other)?;
        Ok(self.measure() + other.measure() - Rational::from_integer(2.into()) * inter)
    }

    /// Containment up to null sets: `m(S1 \ S2) = 0`.
    pub fn is_subset_ae(&self, other: &BoxSet) -> Result<bool, SetAlgError> {
        self.check_dim(other)?;
        Ok((self.measure() - self.intersection_measure(other)?).is_zero())
    }

    /// Equality up to null sets.
    pub fn ae_eq(&self, other: &BoxSet) -> bool {
        if self.dim != other.dim {
            return false;
        }
        self.normalize().boxes == other.normalize().boxes
    }

    /// Smallest enclosing box, or `None` for the empty set.
    pub fn bounding_box(&self) -> Option<AxisBox> {
        let mut it = self.boxes.iter();
        let first = it.next()?;
        let mut lo = first.lo.clone();
        let mut hi = first.hi.clone();
        for b in it {
            for i in 0..self.dim {
                if b.lo[i] < lo[i] {
                    lo[i] = b.lo[i].clone();
                }
                if b.hi[i] > hi[i] {
                    hi[i] = b.hi[i].clone();
                }
            }
        }
        Some(AxisBox { lo, hi })
    }

    fn check_dim(&self, other: &BoxSet) -> Result<(), SetAlgError> {
        if self.dim != other.dim {
            return Err(SetAlgError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BoxSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.boxes.is_empty() {
            return write!(f, "∅");
        }
        let (l, r) = if self.open { ("(", ")") } else { ("[", "]") };
        let mut first = true;
        for b in &self.boxes {
            if !first {
                write!(f, " ∪ ")?;
            }
            first = false;
            for i in 0..self.dim {
                if i > 0 {
                    write!(f, "×")?;
                }
                write!(
                    f,
                    "{}{},{}{}",
                    l,
                    format_rational(&b.lo[i]),
                    format_rational(&b.hi[i]),
                    r
                )?;
            }
        }
        Ok(())
    }
}

/// Membership in an essential difference set, decided by the overlap
/// measure of the underlying set so that boundary points are unambiguous.
pub fn delta_contains(s: &BoxSet, t: &[Rational]) -> Result<bool, SetAlgError> {
    Ok(s.overlap_measure(t)? > Rational::zero())
}

/// Is `D` a packing region for `A`, i.e. `Δ(D) ⊆ Δ(A)` up to null sets?
pub fn is_packing_region(d: &BoxSet, a: &BoxSet) -> Result<bool, SetAlgError> {
    d.essential_difference()
        .is_subset_ae(&a.essential_difference())
}

/// Obstruction verdicts derived from a packing-region comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictTag {
    /// `A` is neither spectral nor can it tile space by translations.
    NotSpectralNotTile,
    /// Additionally, `A` cannot weakly tile its complement.
    NoWeakTilingOfComplement,
    Inconclusive,
}

/// Result of testing `A` against a candidate packing region `D`.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub tag: VerdictTag,
    /// The packing region used as the witness.
    pub witness: BoxSet,
    /// Which decision rule fired.
    pub rule: &'static str,
}

pub const RULE_PACKING_EXCESS: &str = "packing-region-measure-excess";
pub const RULE_ENCLOSING_PACKING_EXCESS: &str = "enclosing-packing-region-measure-excess";
pub const RULE_NO_OBSTRUCTION: &str = "no-obstruction";

/// Compare `A` against a candidate packing region `D`.
///
/// If `Δ(D) ⊆ Δ(A)` and `m(D) > m(A)` then `A` is neither spectral nor a
/// translational tile; if additionally `A ⊆ D` (up to null sets) then `A`
/// cannot even weakly tile its complement.
pub fn obstruction_verdict(a: &BoxSet, d: &BoxSet) -> Result<Verdict, SetAlgError> {
    let packs = is_packing_region(d, a)?;
    let excess = d.measure() > a.measure();
    if packs && excess {
        let a_minus_d = a.measure() - a.intersection_measure(d)?;
        if a_minus_d.is_zero() {
            Ok(Verdict {
                tag: VerdictTag::NoWeakTilingOfComplement,
                witness: d.clone(),
                rule: RULE_ENCLOSING_PACKING_EXCESS,
            })
        } else {
            Ok(Verdict {
                tag: VerdictTag::NotSpectralNotTile,
                witness: d.clone(),
                rule: RULE_PACKING_EXCESS,
            })
        }
    } else {
        Ok(Verdict {
            tag: VerdictTag::Inconclusive,
            witness: d.clone(),
            rule: RULE_NO_OBSTRUCTION,
        })
    }
}

// ---- canonicalization internals ----

fn to_segments(boxes: &[AxisBox], axis: usize) -> Vec<(Rational, Rational)> {
    boxes
        .iter()
        .map(|b| (b.lo[axis].clone(), b.hi[axis].clone()))
        .collect()
}

/// Merge 1D segments into maximal disjoint half-open intervals.
fn merge_segments(mut segs: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    segs.sort();
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(segs.len());
    for (lo, hi) in segs {
        match out.last_mut() {
            Some((_, chi)) if lo <= *chi => {
                if hi > *chi {
                    *chi = hi;
                }
            }
            _ => out.push((lo, hi)),
        }
    }
    out
}

fn normalize_1d(boxes: &[AxisBox]) -> Vec<AxisBox> {
    merge_segments(to_segments(boxes, 0))
        .into_iter()
        .map(|(l, h)| AxisBox {
            lo: vec![l],
            hi: vec![h],
        })
        .collect()
}

/// Slab decomposition: cut at every x-edge, merge the y-structure inside
/// each slab, then fuse neighbouring slabs with identical structure. The
/// result depends only on the indicator function, so it is canonical.
fn normalize_2d(boxes: &[AxisBox]) -> Vec<AxisBox> {
    if boxes.is_empty() {
        return Vec::new();
    }
    let mut xs: Vec<Rational> = Vec::with_capacity(boxes.len() * 2);
    for b in boxes {
        xs.push(b.lo[0].clone());
        xs.push(b.hi[0].clone());
    }
    xs.sort();
    xs.dedup();

    let mut slabs: Vec<(Rational, Rational, Vec<(Rational, Rational)>)> = Vec::new();
    for w in xs.windows(2) {
        let (x0, x1) = (&w[0], &w[1]);
        let ys: Vec<(Rational, Rational)> = boxes
            .iter()
            .filter(|b| &b.lo[0] <= x0 && &b.hi[0] >= x1)
            .map(|b| (b.lo[1].clone(), b.hi[1].clone()))
            .collect();
        if ys.is_empty() {
            continue;
        }
        let merged = merge_segments(ys);
        match slabs.last_mut() {
            Some((_, sx1, sys)) if *sx1 == *x0 && *sys == merged => {
                *sx1 = x1.clone();
            }
            _ => slabs.push((x0.clone(), x1.clone(), merged)),
        }
    }

    let mut out = Vec::new();
    for (x0, x1, ys) in slabs {
        for (y0, y1) in ys {
            out.push(AxisBox {
                lo: vec![x0.clone(), y0],
                hi: vec![x1.clone(), y1],
            });
        }
    }
    out
}

/// 1D set difference of merged segment lists.
fn diff_1d(
    a: &[(Rational, Rational)],
    b: &[(Rational, Rational)],
) -> Vec<(Rational, Rational)> {
    let a = merge_segments(a.to_vec());
    let b = merge_segments(b.to_vec());
    let mut out = Vec::new();
    for (lo, hi) in a {
        let mut cur = lo;
        for (blo, bhi) in &b {
            if *bhi <= cur {
                continue;
            }
            if *blo >= hi {
                break;
            }
            if *blo > cur {
                out.push((cur.clone(), blo.clone()));
            }
            if *bhi >= hi {
                cur = hi.clone();
                break;
            }
            cur = bhi.clone();
        }
        if cur < hi {
            out.push((cur, hi));
        }
    }
    out
}

fn diff_2d(a: &[AxisBox], b: &[AxisBox]) -> Vec<AxisBox> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut xs: Vec<Rational> = Vec::new();
    for bx in a.iter().chain(b.iter()) {
        xs.push(bx.lo[0].clone());
        xs.push(bx.hi[0].clone());
    }
    xs.sort();
    xs.dedup();

    let mut slabs: Vec<(Rational, Rational, Vec<(Rational, Rational)>)> = Vec::new();
    for w in xs.windows(2) {
        let (x0, x1) = (&w[0], &w[1]);
        let cover = |boxes: &[AxisBox]| -> Vec<(Rational, Rational)> {
            boxes
                .iter()
                .filter(|bx| &bx.lo[0] <= x0 && &bx.hi[0] >= x1)
                .map(|bx| (bx.lo[1].clone(), bx.hi[1].clone()))
                .collect()
        };
        let ya = cover(a);
        if ya.is_empty() {
            continue;
        }
        let ys = diff_1d(&ya, &cover(b));
        if ys.is_empty() {
            continue;
        }
        match slabs.last_mut() {
            Some((_, sx1, sys)) if *sx1 == *x0 && *sys == ys => {
                *sx1 = x1.clone();
            }
            _ => slabs.push((x0.clone(), x1.clone(), ys)),
        }
    }

    let mut out = Vec::new();
    for (x0, x1, ys) in slabs {
        for (y0, y1) in ys {
            out.push(AxisBox {
                lo: vec![x0.clone(), y0],
                hi: vec![x1.clone(), y1],
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    fn unit() -> BoxSet {
        BoxSet::interval(rint(0), rint(1)).unwrap()
    }

    /// The L-shaped planar domain of area 5.
    pub(crate) fn l_domain() -> BoxSet {
        BoxSet::new(
            2,
            vec![
                AxisBox::new(vec![rint(0), rint(0)], vec![rint(3), rint(1)]).unwrap(),
                AxisBox::new(vec![rint(1), rint(1)], vec![rint(2), rint(3)]).unwrap(),
            ],
        )
        .unwrap()
    }

    /// The 2×3 rectangle of area 6 used as its packing region.
    pub(crate) fn l_domain_region() -> BoxSet {
        BoxSet::rect(rint(7), rint(9), rint(0), rint(3)).unwrap()
    }

    fn middle_thirds_stage1() -> BoxSet {
        BoxSet::intervals(&[(rint(0), rat(1, 3)), (rat(2, 3), rint(1))]).unwrap()
    }

    #[test]
    fn measure_unit_interval() {
        assert_eq!(unit().measure(), rint(1));
    }

    #[test]
    fn measure_l_domain_is_five() {
        assert_eq!(l_domain().measure(), rint(5));
        assert_eq!(l_domain_region().measure(), rint(6));
    }

    #[test]
    fn measure_collapses_overlap() {
        let s = BoxSet::intervals(&[(rint(0), rint(1)), (rat(1, 2), rat(3, 2))]).unwrap();
        assert_eq!(s.measure(), rat(3, 2));
        let n = s.normalize();
        assert_eq!(n.boxes().len(), 1);
        assert_eq!(n.boxes()[0].lo()[0], rint(0));
        assert_eq!(n.boxes()[0].hi()[0], rat(3, 2));
    }

    #[test]
    fn normalize_is_idempotent_on_disjoint_input() {
        let s = middle_thirds_stage1();
        let n1 = s.normalize();
        let n2 = n1.normalize();
        assert_eq!(n1.boxes(), n2.boxes());
        assert_eq!(n1.boxes().len(), 2);
    }

    #[test]
    fn normalize_2d_overlapping_squares() {
        // Inclusion–exclusion oracle: 4 + 4 − m(overlap) = 4 + 4 − 1 = 7.
        let a = AxisBox::new(vec![rint(0), rint(0)], vec![rint(2), rint(2)]).unwrap();
        let b = AxisBox::new(vec![rint(1), rint(1)], vec![rint(3), rint(3)]).unwrap();
        let overlap = a.intersect(&b).unwrap().volume();
        let oracle = a.volume() + b.volume() - overlap;
        assert_eq!(oracle, rint(7));
        let s = BoxSet::new(2, vec![a, b]).unwrap();
        assert_eq!(s.measure(), rint(7));
        // partition: pairwise disjoint boxes summing to the measure
        let n = s.normalize();
        assert_eq!(n.raw_volume_sum(), rint(7));
        for i in 0..n.boxes().len() {
            for j in 0..n.boxes().len() {
                if i != j {
                    assert!(n.boxes()[i].intersect(&n.boxes()[j]).is_none());
                }
            }
        }
    }

    #[test]
    fn overlap_tent_function_of_interval() {
        let s = unit();
        assert_eq!(s.overlap_measure(&[rat(1, 2)]).unwrap(), rat(1, 2));
        assert_eq!(s.overlap_measure(&[rint(0)]).unwrap(), rint(1));
    }

    #[test]
    fn overlap_stage1_brute_force() {
        // brute force over the four box-pair intersections gives 1/3 at t = 2/3
        let s = middle_thirds_stage1();
        assert_eq!(s.overlap_measure(&[rat(2, 3)]).unwrap(), rat(1, 3));
    }

    #[test]
    fn difference_set_of_interval() {
        let d = unit().essential_difference();
        assert!(d.is_open());
        let expected = BoxSet::interval(rint(-1), rint(1)).unwrap();
        assert!(d.ae_eq(&expected));
    }

    #[test]
    fn difference_set_of_rectangle() {
        let d = l_domain_region().essential_difference();
        let expected = BoxSet::rect(rint(-2), rint(2), rint(-3), rint(3)).unwrap();
        assert!(d.ae_eq(&expected));
    }

    #[test]
    fn difference_set_of_stage1_brute_force() {
        // Four box-pair differences: (−1/3,1/3) twice, (−1,−1/3), (1/3,1).
        // Up to null sets their union is (−1,1); the deleted endpoints
        // ±1/3 are genuinely outside, which the overlap oracle certifies.
        let s = middle_thirds_stage1();
        let d = s.essential_difference();
        assert!(d.ae_eq(&BoxSet::interval(rint(-1), rint(1)).unwrap()));
        assert_eq!(s.overlap_measure(&[rat(1, 3)]).unwrap(), rint(0));
        assert_eq!(s.overlap_measure(&[rat(-1, 3)]).unwrap(), rint(0));
        assert!(delta_contains(&s, &[rat(1, 4)]).unwrap());
        assert!(!delta_contains(&s, &[rat(1, 3)]).unwrap());
    }

    #[test]
    fn empty_set_has_empty_difference_set() {
        let e = BoxSet::empty(1);
        assert!(e.essential_difference().is_empty_set());
    }

    #[test]
    fn subset_figure_domains() {
        let da = l_domain().essential_difference();
        let dd = l_domain_region().essential_difference();
        assert!(dd.is_subset_ae(&da).unwrap());
        assert!(!da.is_subset_ae(&dd).unwrap());
    }

    #[test]
    fn subset_is_reflexive() {
        let s = middle_thirds_stage1();
        assert!(s.is_subset_ae(&s).unwrap());
    }

    #[test]
    fn subset_detects_positive_measure_gap() {
        // (−1,1) is not inside Δ of a stage with a fat central gap.
        let s = BoxSet::intervals(&[(rint(0), rat(1, 4)), (rat(3, 4), rint(1))]).unwrap();
        let d = s.essential_difference();
        let full = BoxSet::interval(rint(-1), rint(1)).unwrap();
        assert!(!full.is_subset_ae(&d).unwrap());
        assert!(d.is_subset_ae(&full).unwrap());
    }

    #[test]
    fn subset_dimension_mismatch_is_error() {
        let a = unit();
        let b = l_domain();
        assert!(matches!(
            a.is_subset_ae(&b),
            Err(SetAlgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn packing_region_examples() {
        assert!(is_packing_region(&l_domain_region(), &l_domain()).unwrap());
        let a = unit();
        assert!(is_packing_region(&a, &a).unwrap());
        let d = BoxSet::interval(rint(0), rint(2)).unwrap();
        assert!(!is_packing_region(&d, &a).unwrap());
    }

    #[test]
    fn verdict_for_figure_domains() {
        let v = obstruction_verdict(&l_domain(), &l_domain_region()).unwrap();
        assert_eq!(v.tag, VerdictTag::NotSpectralNotTile);
        assert_eq!(v.rule, RULE_PACKING_EXCESS);
    }

    #[test]
    fn verdict_equal_sets_inconclusive() {
        let a = l_domain();
        let v = obstruction_verdict(&a, &a).unwrap();
        assert_eq!(v.tag, VerdictTag::Inconclusive);
    }

    #[test]
    fn symdiff_examples() {
        let a = unit();
        assert_eq!(a.symdiff_measure(&a).unwrap(), rint(0));
        let b = BoxSet::interval(rat(1, 2), rat(3, 2)).unwrap();
        assert_eq!(a.symdiff_measure(&b).unwrap(), rint(1));
    }

    #[test]
    fn difference_1d() {
        let a = unit();
        let b = BoxSet::interval(rat(1, 4), rat(1, 2)).unwrap();
        let d = a.difference(&b).unwrap();
        let expected =
            BoxSet::intervals(&[(rint(0), rat(1, 4)), (rat(1, 2), rint(1))]).unwrap();
        assert!(d.ae_eq(&expected));
        assert_eq!(d.measure(), rat(3, 4));
    }

    #[test]
    fn difference_2d() {
        let a = BoxSet::rect(rint(0), rint(2), rint(0), rint(2)).unwrap();
        let b = BoxSet::rect(rint(1), rint(3), rint(1), rint(3)).unwrap();
        let d = a.difference(&b).unwrap();
        assert_eq!(d.measure(), rint(3));
        assert_eq!(d.intersection_measure(&b).unwrap(), rint(0));
        let back = d.union(&a.intersection(&b)).unwrap();
        assert!(back.ae_eq(&a));
    }

    impl BoxSet {
        /// test helper: exact intersection as a set, via difference
        fn intersection(&self, other: &BoxSet) -> BoxSet {
            self.difference(&self.difference(other).unwrap()).unwrap()
        }
    }

    #[test]
    fn display_formats() {
        let d = unit().essential_difference();
        assert_eq!(format!("{}", d), "(-1,1)");
        let r = l_domain_region().essential_difference();
        assert_eq!(format!("{}", r), "(-2,2)×(-3,3)");
        assert_eq!(format!("{}", BoxSet::empty(1)), "∅");
    }
}
