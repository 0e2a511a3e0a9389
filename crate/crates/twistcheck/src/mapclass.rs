//! Mapping classes as automorphisms of the fundamental groupoid, and the
//! Dehn-twist construction.
//!
//! A mapping class of Σ_{g,r} fixing the boundary pointwise is stored by
//! the images of the `2g+r−1` dual loops based at the marked point m_1 and,
//! for each further boundary component i, the loop part of the image of a
//! fixed connecting arc m_1 → m_i (the arc itself has empty crossing word).
//! The identity test — all loop images equal the generators and all arc
//! parts empty — is sound and complete for boundary-fixing classes because
//! the loops and arcs together fill the surface (Alexander method); the
//! property-test suite exercises this rather than assuming it.
//!
//! Handedness: with the counterclockwise orientation of the polygon model,
//! `twist` produces the right-handed (positive) Dehn twist. The sign is
//! pinned by the lantern relation and the flat-torus transvection oracle in
//! the test suite.

use crate::curve::Curve;
use crate::error::EngineError;
use crate::geometry::{cmp_along, link_assigned, Strand};
use crate::surface::{SurfaceModel, SurfaceSig};
use crate::word::{Letter, Word};
use std::cmp::Ordering;

/// Insertion sign that realizes the *right-handed* twist in this model.
/// Pinned by `tests/convention.rs` (lantern relation + transvection oracle).
pub(crate) const RIGHT_HANDED: i8 = 1;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MappingClass {
    sig: SurfaceSig,
    /// Images of the dual loop generators (length 2g+r−1).
    loops: Vec<Word>,
    /// Loop parts of the images of the connecting arcs m_1 → m_i, i = 2..r.
    arcs: Vec<Word>,
    /// The same data for the inverse automorphism, tracked alongside so
    /// inversion is O(1).
    inv_loops: Vec<Word>,
    inv_arcs: Vec<Word>,
}

impl MappingClass {
    pub fn identity(sig: SurfaceSig) -> MappingClass {
        let loops: Vec<Word> = (1..=sig.rank() as Letter).map(Word::generator).collect();
        let arcs = vec![Word::identity(); (sig.boundary as usize).saturating_sub(1)];
        MappingClass {
            sig,
            loops: loops.clone(),
            arcs: arcs.clone(),
            inv_loops: loops,
            inv_arcs: arcs,
        }
    }

    pub fn signature(&self) -> SurfaceSig {
        self.sig
    }

    pub fn loop_images(&self) -> &[Word] {
        &self.loops
    }

    pub fn arc_images(&self) -> &[Word] {
        &self.arcs
    }

    pub fn inverse(&self) -> MappingClass {
        MappingClass {
            sig: self.sig,
            loops: self.inv_loops.clone(),
            arcs: self.inv_arcs.clone(),
            inv_loops: self.loops.clone(),
            inv_arcs: self.arcs.clone(),
        }
    }

    /// `self ∘ other`: `other` acts first (leftmost letter of a twist word
    /// acts last, matching the functional composition convention).
    pub fn compose(&self, other: &MappingClass) -> Result<MappingClass, EngineError> {
        if self.sig != other.sig {
            return Err(EngineError::SurfaceMismatch(self.sig, other.sig));
        }
        let loops: Vec<Word> =
            other.loops.iter().map(|w| w.substitute(&self.loops)).collect();
        let arcs: Vec<Word> = (0..self.arcs.len())
            .map(|i| other.arcs[i].substitute(&self.loops).concat(&self.arcs[i]))
            .collect();
        // (self ∘ other)⁻¹ = other⁻¹ ∘ self⁻¹
        let inv_loops: Vec<Word> =
            self.inv_loops.iter().map(|w| w.substitute(&other.inv_loops)).collect();
        let inv_arcs: Vec<Word> = (0..self.arcs.len())
            .map(|i| {
                self.inv_arcs[i]
                    .substitute(&other.inv_loops)
                    .concat(&other.inv_arcs[i])
            })
            .collect();
        Ok(MappingClass { sig: self.sig, loops, arcs, inv_loops, inv_arcs })
    }

    pub fn is_identity(&self) -> bool {
        self.arcs.iter().all(|w| w.is_empty())
            && self
                .loops
                .iter()
                .enumerate()
                .all(|(i, w)| w.letters() == [(i + 1) as Letter])
    }

    pub fn equals(&self, other: &MappingClass) -> bool {
        self.sig == other.sig && self.loops == other.loops && self.arcs == other.arcs
    }

    /// Image of a curve class.
    pub fn apply(&self, model: &SurfaceModel, c: &Curve) -> Result<Curve, EngineError> {
        if self.sig != c.signature() {
            return Err(EngineError::SurfaceMismatch(self.sig, c.signature()));
        }
        Curve::from_word(model, &c.word().substitute(&self.loops))
    }

    /// Structured debug dump (generator → image word) for golden tests.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, w) in self.loops.iter().enumerate() {
            out.push_str(&format!(
                "{} -> {}\n",
                generator_name(self.sig, (i + 1) as Letter),
                word_string(self.sig, w)
            ));
        }
        for (i, w) in self.arcs.iter().enumerate() {
            out.push_str(&format!("eta{} -> {}\n", i + 2, word_string(self.sig, w)));
        }
        out
    }
}

/// Printable name of a dual-loop generator.
pub fn generator_name(sig: SurfaceSig, letter: Letter) -> String {
    let k = letter.unsigned_abs() as u32;
    let g = sig.genus;
    let base = if k <= 2 * g {
        let j = k.div_ceil(2);
        if k % 2 == 1 {
            format!("A{j}")
        } else {
            format!("B{j}")
        }
    } else {
        format!("E{}", k - 2 * g + 1)
    };
    if letter < 0 {
        format!("{base}'")
    } else {
        base
    }
}

fn word_string(sig: SurfaceSig, w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.letters()
        .iter()
        .map(|&l| generator_name(sig, l))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Right-handed Dehn twist along a simple closed curve.
pub fn twist(model: &SurfaceModel, c: &Curve) -> Result<MappingClass, EngineError> {
    twist_power(model, c, RIGHT_HANDED)
}

/// Left-handed (inverse) Dehn twist.
pub fn inverse_twist(model: &SurfaceModel, c: &Curve) -> Result<MappingClass, EngineError> {
    twist_power(model, c, -RIGHT_HANDED)
}

fn twist_power(model: &SurfaceModel, c: &Curve, hand: i8) -> Result<MappingClass, EngineError> {
    if c.signature() != model.sig {
        return Err(EngineError::SurfaceMismatch(model.sig, c.signature()));
    }
    if c.is_null_homotopic() {
        return Ok(MappingClass::identity(model.sig));
    }
    c.certify_simple(model)?;
    let sig = model.sig;
    let m1 = model.free_side(1);
    let gen_paths: Vec<(Word, usize, usize)> = (1..=sig.rank() as Letter)
        .map(|k| (Word::generator(k), m1, m1))
        .chain((2..=sig.boundary).map(|i| (Word::identity(), m1, model.free_side(i))))
        .collect();
    let mut images = Vec::with_capacity(gen_paths.len());
    let mut inv_images = Vec::with_capacity(gen_paths.len());
    for (u, from, to) in &gen_paths {
        images.push(twisted_path_word(model, c.word(), u, *from, *to, hand));
        inv_images.push(twisted_path_word(model, c.word(), u, *from, *to, -hand));
    }
    let n = sig.rank();
    let loops = images[..n].to_vec();
    let arcs = images[n..].to_vec();
    let inv_loops = inv_images[..n].to_vec();
    let inv_arcs = inv_images[n..].to_vec();
    Ok(MappingClass { sig, loops, arcs, inv_loops, inv_arcs })
}

/// Core of the twist construction: the image of a transverse path under the
/// twist along the curve with cyclic word `cw`. Each minimal-position
/// crossing of the path with the curve inserts the curve word, rotated to
/// start at the crossed strand, with the exponent given by the crossing
/// sign times the handedness.
fn twisted_path_word(
    model: &SurfaceModel,
    cw: &Word,
    u: &Word,
    from: usize,
    to: usize,
    hand: i8,
) -> Word {
    let n = cw.len();
    let mut out: Vec<Letter> = Vec::new();
    for p in 0..=u.len() {
        let ps = Strand::of_path(u, p, from, to);
        let mut crossings: Vec<(usize, i8)> = Vec::new();
        for j in 0..n {
            let cs = Strand::of_curve(cw, j);
            if let Some(cr) = link_assigned(model, &ps, &cs) {
                crossings.push((j, cr.sign));
            }
        }
        // order the crossings along the path passage (back → fwd)
        crossings.sort_by(|&(j1, _), &(j2, _)| {
            if j1 == j2 {
                return Ordering::Equal;
            }
            cmp_along(
                model,
                &ps,
                &Strand::of_curve(cw, j1),
                &Strand::of_curve(cw, j2),
            )
        });
        for (j, s) in crossings {
            let rot = cw.rotated((j + 1) % n);
            let ins = if s * hand > 0 { rot } else { rot.inverse() };
            out.extend_from_slice(ins.letters());
        }
        if p < u.len() {
            out.push(u.letters()[p]);
        }
    }
    Word::from_letters(out)
}
