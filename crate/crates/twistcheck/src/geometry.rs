//! Cyclic order at infinity for transverse strands in the polygon model.
//!
//! The universal cover of the modeled surface is a tree of polygon tiles.
//! A strand passing through a tile has two *rays*: the itineraries of sides
//! it crosses on each side of the tile, either eventually terminating on a
//! free side (paths ending at a marked point) or periodic (closed curves).
//! Rays from a common tile are totally ordered by the counterclockwise
//! order of the tile's sides, refined recursively across glued sides; two
//! strands cross in minimal position exactly when their ray pairs alternate
//! in this circular order. Everything else in the engine — intersection
//! numbers, simpleness certificates, and the Dehn-twist action — reduces to
//! this comparison.

use crate::surface::SurfaceModel;
use crate::word::{Letter, Word};
use std::cmp::Ordering;

/// One step of a ray: either it crosses a glued side spelling a letter, or
/// it terminates on a free side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Step {
    Cross(Letter),
    Stop(usize), // free side index
}

/// A lazily evaluated ray.
#[derive(Clone, Debug)]
pub struct Ray<'a> {
    kind: RayKind<'a>,
    cursor: usize,
}

#[derive(Clone, Debug)]
enum RayKind<'a> {
    /// Emits `w[idx], w[idx+1], …` cyclically.
    Forward { w: &'a Word, idx: usize },
    /// Emits `-w[idx], -w[idx-1], …` cyclically.
    Backward { w: &'a Word, idx: usize },
    /// Finite letter list, then termination on a free side.
    Terminating { letters: Vec<Letter>, stop: usize },
}

impl<'a> Ray<'a> {
    pub fn curve_forward(w: &'a Word, strand: usize) -> Self {
        debug_assert!(!w.is_empty());
        Ray { kind: RayKind::Forward { w, idx: (strand + 1) % w.len() }, cursor: 0 }
    }

    pub fn curve_backward(w: &'a Word, strand: usize) -> Self {
        debug_assert!(!w.is_empty());
        Ray { kind: RayKind::Backward { w, idx: strand }, cursor: 0 }
    }

    pub fn terminating(letters: Vec<Letter>, stop_side: usize) -> Self {
        Ray { kind: RayKind::Terminating { letters, stop: stop_side }, cursor: 0 }
    }

    fn step(&self, k: usize) -> Step {
        match &self.kind {
            RayKind::Forward { w, idx } => {
                let n = w.len();
                Step::Cross(w.letters()[(idx + k) % n])
            }
            RayKind::Backward { w, idx } => {
                let n = w.len();
                // idx, idx-1, … with wraparound
                let pos = (*idx + n - (k % n)) % n;
                Step::Cross(-w.letters()[pos])
            }
            RayKind::Terminating { letters, stop } => {
                if k < letters.len() {
                    Step::Cross(letters[k])
                } else {
                    Step::Stop(*stop)
                }
            }
        }
    }

    fn period(&self) -> usize {
        match &self.kind {
            RayKind::Forward { w, .. } | RayKind::Backward { w, .. } => w.len(),
            RayKind::Terminating { letters, .. } => letters.len() + 1,
        }
    }
}

/// Total order on rays emanating from one tile, induced by linearizing the
/// counterclockwise side order at a cut placed at the corner before side 0
/// (base level) and just after the entry side at each recursion level.
pub fn cmp_rays(model: &SurfaceModel, a: &Ray, b: &Ray) -> Ordering {
    let m = model.side_count();
    let mut cut: Option<usize> = None;
    let bound = 2 * (a.period() + b.period()) + 4;
    for depth in 0..=bound {
        let sa = a.step(depth);
        let sb = b.step(depth);
        let side = |s: Step| match s {
            Step::Cross(l) => model.exit_side(l),
            Step::Stop(f) => f,
        };
        let rank = |s: usize| match cut {
            None => s,
            Some(c) => (s + m - c - 1) % m,
        };
        let (side_a, side_b) = (side(sa), side(sb));
        match rank(side_a).cmp(&rank(side_b)) {
            Ordering::Equal => match (sa, sb) {
                (Step::Stop(_), Step::Stop(_)) => return Ordering::Equal,
                (Step::Cross(l), Step::Cross(_)) => {
                    cut = Some(model.entry_side(l));
                }
                _ => unreachable!("equal side rank implies equal side kind"),
            },
            ord => return ord,
        }
    }
    // Two periodic rays agreeing beyond the Fine–Wilf bound are equal
    // forever: the strands share an endpoint at infinity.
    Ordering::Equal
}

/// A strand through the base tile: a pair of rays.
pub struct Strand<'a> {
    pub back: Ray<'a>,
    pub fwd: Ray<'a>,
}

impl<'a> Strand<'a> {
    /// Strand `j` of a cyclically reduced curve word: the passage between
    /// letters `w[j]` and `w[j+1]`.
    pub fn of_curve(w: &'a Word, j: usize) -> Self {
        Strand { back: Ray::curve_backward(w, j), fwd: Ray::curve_forward(w, j) }
    }

    /// Passage `p` (0 ..= len) of a path with reduced word `u` running from
    /// the marked point on `from_side` to the one on `to_side`.
    pub fn of_path(u: &Word, p: usize, from_side: usize, to_side: usize) -> Strand<'static> {
        let back: Vec<Letter> = (0..p).rev().map(|i| -u.letters()[i]).collect();
        let fwd: Vec<Letter> = (p..u.len()).map(|i| u.letters()[i]).collect();
        Strand {
            back: Ray::terminating(back, from_side),
            fwd: Ray::terminating(fwd, to_side),
        }
    }
}

/// True if `x` lies strictly inside the counterclockwise interval from `a`
/// to `b` on the circle of rays.
fn in_ccw_interval(model: &SurfaceModel, x: &Ray, a: &Ray, b: &Ray) -> bool {
    let xa = cmp_rays(model, x, a);
    let xb = cmp_rays(model, x, b);
    let ab = cmp_rays(model, a, b);
    if xa == Ordering::Equal || xb == Ordering::Equal {
        return false;
    }
    match ab {
        Ordering::Less => xa == Ordering::Greater && xb == Ordering::Less,
        Ordering::Greater => xa == Ordering::Greater || xb == Ordering::Less,
        Ordering::Equal => false,
    }
}

/// Crossing data of two strands in a common tile.
pub struct Crossing {
    /// +1 if the counterclockwise circular order is
    /// (s.back, t.back, s.fwd, t.fwd); −1 for the mirror order.
    pub sign: i8,
}

/// Tests whether the two strands' lines cross (their ray quadruple
/// alternates in the circular order at infinity).
pub fn link(model: &SurfaceModel, s: &Strand, t: &Strand) -> Option<Crossing> {
    let tb_in = in_ccw_interval(model, &t.back, &s.back, &s.fwd);
    let tf_in = in_ccw_interval(model, &t.fwd, &s.back, &s.fwd);
    if tb_in == tf_in {
        return None;
    }
    Some(Crossing { sign: if tb_in { 1 } else { -1 } })
}

/// Crossing test that counts each geometric crossing exactly once.
///
/// Two crossing lines share a connected segment of tiles, and the `link`
/// test fires in every shared tile; a pair is therefore only counted in the
/// tile that is backward-most along `s`: the tile behind `s` (across the
/// first side of `s.back`) must not be on `t`'s path. Summing over strand
/// pairs with this assignment yields minimal intersection numbers.
pub fn link_assigned(model: &SurfaceModel, s: &Strand, t: &Strand) -> Option<Crossing> {
    if let Step::Cross(x) = s.back.step(0) {
        for ray in [&t.back, &t.fwd] {
            if ray.step(0) == Step::Cross(x) {
                return None;
            }
        }
    }
    link(model, s, t)
}

/// Orders crossings along a directed strand `s` (back → fwd): for each
/// crossing strand, its ray inside the interval (s.back, s.fwd) determines
/// the position. Returns `Less` if `t1` is met before `t2`.
///
/// Valid when `t1`, `t2` are disjoint from each other (strands of one
/// simple curve), which makes the position order well defined.
pub fn cmp_along(model: &SurfaceModel, s: &Strand, t1: &Strand, t2: &Strand) -> Ordering {
    let e1 = entering_ray(model, s, t1);
    let e2 = entering_ray(model, s, t2);
    // order counterclockwise from s.back
    if cmp_rays(model, &e1, &e2) == Ordering::Equal {
        return Ordering::Equal;
    }
    if in_ccw_interval(model, &e1, &s.back, &e2) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// The ray of `t` lying inside the counterclockwise interval
/// (s.back, s.fwd); caller must know `t` crosses `s`.
fn entering_ray<'b>(model: &SurfaceModel, s: &Strand, t: &Strand<'b>) -> Ray<'b> {
    if in_ccw_interval(model, &t.back, &s.back, &s.fwd) {
        t.back.clone()
    } else {
        t.fwd.clone()
    }
}
