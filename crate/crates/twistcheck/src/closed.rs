//! Word and conjugacy problems on closed surfaces Σ_{g,0}.
//!
//! Capping the last boundary component of Σ_{g,1} kills the boundary word
//! R (length 4g), presenting π₁(Σ_{g,0}) as the one-relator group
//! F(x_1..x_{2g}) / ⟨⟨R⟩⟩. For g ≥ 2 the presentation satisfies the small
//! cancellation condition C′(1/6) (all pieces of R have length 1), so
//! Dehn's algorithm decides the word problem, and conjugacy classes get a
//! canonical form by saturating cyclic words under rotations and
//! half-relator swaps. For g = 1 the group is Z² and everything reduces to
//! exponent sums.
//!
//! A mapping class of Σ_{g,1} descends to the identity of Σ_{g,0} exactly
//! when the induced automorphism of the surface group is inner
//! (Dehn–Nielsen–Baer); `is_identity_capped` tests this by solving the
//! conjugacy problem with witnesses.

use crate::mapclass::MappingClass;
use crate::surface::{SurfaceModel, SurfaceSig};
use crate::word::{Letter, Word};
use std::collections::{HashMap, VecDeque};

/// Word-problem and conjugacy machinery for π₁(Σ_{g,0}).
pub struct ClosedWords {
    pub g: u32,
    relator: Word,
    /// All rotations of R and R⁻¹ (empty for g = 1: handled abelianly).
    rot: Vec<Word>,
    half: usize,
}

/// Safety cap on the conjugacy-orbit saturation.
const ORBIT_CAP: usize = 200_000;

impl ClosedWords {
    pub fn new(g: u32) -> ClosedWords {
        assert!(g >= 1);
        let model = SurfaceModel::build(SurfaceSig::new(g, 1)).unwrap();
        let relator = model.boundary_word(1).clone();
        assert_eq!(relator.len(), 4 * g as usize);
        let mut rot = Vec::new();
        if g >= 2 {
            for base in [relator.clone(), relator.inverse()] {
                for k in 0..base.len() {
                    rot.push(base.rotated(k));
                }
            }
        }
        ClosedWords { g, relator, rot, half: 2 * g as usize }
    }

    pub fn rank(&self) -> usize {
        2 * self.g as usize
    }

    pub fn relator(&self) -> &Word {
        &self.relator
    }

    /// Dehn reduction: repeatedly replace any subword matching more than
    /// half of a relator rotation by the shorter complement. For g ≥ 2 the
    /// result is empty iff the element is trivial.
    pub fn reduce(&self, w: &Word) -> Word {
        let mut cur = w.clone();
        'outer: loop {
            let letters = cur.letters();
            for i in 0..letters.len() {
                for r in &self.rot {
                    let rl = r.letters();
                    let maxl = rl.len().min(letters.len() - i);
                    let mut l = 0;
                    while l < maxl && letters[i + l] == rl[l] {
                        l += 1;
                    }
                    if l > self.half {
                        // matched p with r = p·q and p ≡ q⁻¹
                        let mut next: Vec<Letter> = letters[..i].to_vec();
                        next.extend(rl[l..].iter().rev().map(|&x| -x));
                        next.extend_from_slice(&letters[i + l..]);
                        cur = Word::from_letters(next);
                        continue 'outer;
                    }
                }
            }
            return cur;
        }
    }

    pub fn is_trivial(&self, w: &Word) -> bool {
        if self.g == 1 {
            w.abelianized(2).iter().all(|&x| x == 0)
        } else {
            self.reduce(w).is_empty()
        }
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.is_trivial(&u.concat(&v.inverse()))
    }

    /// Fully cyclically Dehn-reduces `w`; returns `(core, conj)` with
    /// `w = conj · core · conj⁻¹` in the group.
    fn cyclic_reduce_witness(&self, w: &Word) -> (Word, Word) {
        let mut cur = w.clone();
        let mut conj = Word::identity();
        loop {
            let (core, p) = cur.cyclic_reduce();
            conj = conj.concat(&p);
            cur = core;
            let red = self.reduce(&cur);
            if red.len() < cur.len() {
                cur = red;
                continue;
            }
            // expose wrap-around matches by rotating
            let mut improved = false;
            for k in 1..cur.len() {
                let rotk = cur.rotated(k);
                let red = self.reduce(&rotk);
                if red.len() < rotk.len() {
                    let prefix = Word::from_letters(cur.letters()[..k].iter().copied());
                    conj = conj.concat(&prefix);
                    cur = red;
                    improved = true;
                    break;
                }
            }
            if !improved {
                return (cur, conj);
            }
        }
    }

    /// Canonical form of the conjugacy class of `w`, with a witness:
    /// returns `(canon, u)` such that `w = u · canon · u⁻¹` in the group.
    ///
    /// For g ≥ 2: saturate the cyclically reduced core under rotations and
    /// equal-length half-relator swaps; the canonical form is the
    /// lexicographically least member of the orbit.
    pub fn conjugacy_canonical(&self, w: &Word) -> (Word, Word) {
        if self.g == 1 {
            let ab = w.abelianized(2);
            let mut letters = Vec::new();
            let l1 = if ab[0] >= 0 { 1 } else { -1 };
            for _ in 0..ab[0].abs() {
                letters.push(l1);
            }
            let l2 = if ab[1] >= 0 { 2 } else { -2 };
            for _ in 0..ab[1].abs() {
                letters.push(l2);
            }
            return (Word::from_letters(letters), Word::identity());
        }
        let (core, conj) = self.cyclic_reduce_witness(w);
        if core.is_empty() {
            return (core, conj);
        }
        let mut seen: HashMap<Word, Word> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(core.clone(), Word::identity());
        queue.push_back(core.clone());
        while let Some(s) = queue.pop_front() {
            assert!(seen.len() <= ORBIT_CAP, "conjugacy orbit exceeded safety cap");
            let ws = seen[&s].clone();
            // rotation by one letter
            if s.len() > 1 {
                let first = Word::generator(s.letters()[0]);
                let rot = s.rotated(1);
                seen.entry(rot.clone()).or_insert_with(|| {
                    queue.push_back(rot.clone());
                    ws.concat(&first)
                });
            }
            // half-relator swaps (element-preserving, equal length)
            let letters = s.letters();
            for i in 0..letters.len().saturating_sub(self.half - 1) {
                for r in &self.rot {
                    let rl = r.letters();
                    if letters[i..i + self.half] == rl[..self.half] {
                        let mut next: Vec<Letter> = letters[..i].to_vec();
                        next.extend(rl[self.half..].iter().rev().map(|&x| -x));
                        next.extend_from_slice(&letters[i + self.half..]);
                        let cand = Word::from_letters(next);
                        if cand.len() == s.len() {
                            seen.entry(cand.clone()).or_insert_with(|| {
                                queue.push_back(cand.clone());
                                ws.clone()
                            });
                        }
                    }
                }
            }
        }
        let canon = seen.keys().min().unwrap().clone();
        let wit = conj.concat(&seen[&canon]);
        (canon, wit)
    }

    /// Canonical form of an *unoriented* free homotopy class (isotopy class
    /// of an unoriented closed curve).
    pub fn curve_canonical(&self, w: &Word) -> Word {
        let (a, _) = self.conjugacy_canonical(w);
        let (b, _) = self.conjugacy_canonical(&w.inverse());
        a.min(b)
    }

    /// Finds `u` with `a = u · b · u⁻¹`, if `a` and `b` are conjugate.
    pub fn conjugate_witness(&self, a: &Word, b: &Word) -> Option<Word> {
        let (ca, wa) = self.conjugacy_canonical(a);
        let (cb, wb) = self.conjugacy_canonical(b);
        if ca != cb {
            return None;
        }
        Some(wa.concat(&wb.inverse()))
    }

    /// Is the endomorphism sending generator i to `images[i-1]` an inner
    /// automorphism of the surface group? (g ≥ 2; callers handle g ≤ 1.)
    pub fn is_inner(&self, images: &[Word]) -> bool {
        assert!(self.g >= 2);
        assert_eq!(images.len(), self.rank());
        let x1 = Word::generator(1);
        let Some(w0) = self.conjugate_witness(&images[0], &x1) else {
            return false;
        };
        // centralizer of x1 is ⟨x1⟩, so any conjugator is w0·x1^k; pin k
        // with the second generator
        let x2 = Word::generator(2);
        let z = self.reduce(&w0.inverse().concat(&images[1]).concat(&w0));
        let bound = z.len() as i64 / 2 + 2;
        let mut found = None;
        for k in -bound..=bound {
            let x1k = power(&x1, k);
            let cand = x1k.concat(&x2).concat(&x1k.inverse());
            if self.equal(&cand, &z) {
                found = Some(k);
                break;
            }
        }
        let Some(k) = found else {
            return false;
        };
        let w = w0.concat(&power(&x1, k));
        images.iter().enumerate().all(|(i, img)| {
            let gen = Word::generator((i + 1) as Letter);
            self.equal(&w.concat(&gen).concat(&w.inverse()), img)
        })
    }

    /// Does a boundary-fixing mapping class of Σ_{g,1} become the identity
    /// after capping the boundary with a disk?
    pub fn is_identity_capped(&self, mc: &MappingClass) -> bool {
        assert_eq!(mc.signature(), SurfaceSig::new(self.g, 1));
        if self.g == 1 {
            // M_{1,0} ≅ SL(2,Z): the homology matrix decides
            let m = crate::homology::homology_action(mc);
            m == crate::homology::HomologyMatrix::identity(2)
        } else {
            self.is_inner(mc.loop_images())
        }
    }
}

fn power(w: &Word, k: i64) -> Word {
    let base = if k >= 0 { w.clone() } else { w.inverse() };
    let mut out = Word::identity();
    for _ in 0..k.abs() {
        out = out.concat(&base);
    }
    out
}
