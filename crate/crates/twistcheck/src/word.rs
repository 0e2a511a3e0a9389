//! Reduced words in a finitely generated free group.
//!
//! A letter is a nonzero `i16`: `k > 0` is the k-th generator, `-k` its
//! inverse. A [`Word`] is kept freely reduced at all times; cyclic words
//! (conjugacy classes) additionally get a canonical rotation.

/// A letter of a free group word; `k` and `-k` are mutually inverse.
pub type Letter = i16;

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "w{:?}", self.0)
    }
}

impl Word {
    /// Builds a word from raw letters, freely reducing.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not a valid generator");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(g: Letter) -> Self {
        assert!(g != 0);
        Word(vec![g])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    /// Product `self · other`, freely reduced.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &l in &other.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// `conj · self · conj⁻¹`.
    pub fn conjugated_by(&self, conj: &Word) -> Word {
        conj.concat(self).concat(&conj.inverse())
    }

    /// Replaces each generator `k` by `images[k-1]` (and `-k` by its inverse).
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len() * 2);
        for &l in &self.0 {
            let img = &images[(l.abs() - 1) as usize];
            let push = |out: &mut Vec<Letter>, l: Letter| {
                if out.last() == Some(&-l) {
                    out.pop();
                } else {
                    out.push(l);
                }
            };
            if l > 0 {
                for &m in img.letters() {
                    push(&mut out, m);
                }
            } else {
                for &m in img.inverse().letters() {
                    push(&mut out, m);
                }
            }
        }
        Word(out)
    }

    /// Strips matching first/last inverse pairs; returns the cyclically
    /// reduced core `c` and the prefix `p` with `self = p · c · p⁻¹`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut v = self.0.clone();
        let mut prefix = Vec::new();
        while v.len() >= 2 && *v.first().unwrap() == -*v.last().unwrap() {
            prefix.push(v[0]);
            v.pop();
            v.remove(0);
        }
        (Word(v), Word(prefix))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.0.len() < 2 || *self.0.first().unwrap() != -*self.0.last().unwrap()
    }

    /// Rotation moving the first `k` letters to the end (valid on
    /// cyclically reduced words).
    pub fn rotated(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    /// Canonical representative of the cyclic word up to rotation: the
    /// lexicographically least rotation of the cyclically reduced core.
    pub fn cyclic_canonical_oriented(&self) -> Word {
        let (core, _) = self.cyclic_reduce();
        if core.is_empty() {
            return core;
        }
        (0..core.len())
            .map(|k| core.rotated(k))
            .min()
            .expect("nonempty")
    }

    /// Canonical representative up to rotation *and* inversion (unoriented
    /// cyclic word).
    pub fn cyclic_canonical_unoriented(&self) -> Word {
        let a = self.cyclic_canonical_oriented();
        let b = self.inverse().cyclic_canonical_oriented();
        a.min(b)
    }

    /// True if the cyclic word is a proper power of a shorter word.
    pub fn is_cyclic_power(&self) -> bool {
        let (core, _) = self.cyclic_reduce();
        let n = core.len();
        if n == 0 {
            return false;
        }
        for d in 1..n {
            if n % d == 0 && core.rotated(d) == core {
                return true;
            }
        }
        false
    }

    /// Exponent sum of each generator, for an alphabet of `rank` generators.
    pub fn abelianized(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for &l in &self.0 {
            v[(l.abs() - 1) as usize] += l.signum() as i64;
        }
        v
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word::from_letters(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_concat() {
        let w = Word::from_letters([1, 2, -2, 3]);
        assert_eq!(w.letters(), &[1, 3]);
        let u = Word::from_letters([-3, -1]);
        assert!(w.concat(&u).is_empty());
    }

    #[test]
    fn cyclic_reduce_tracks_conjugator() {
        let w = Word::from_letters([1, 2, 3, -2, -1]);
        let (core, p) = w.cyclic_reduce();
        assert_eq!(core.letters(), &[3]);
        assert_eq!(p.letters(), &[1, 2]);
        assert_eq!(core.conjugated_by(&p), w);
    }

    #[test]
    fn canonical_forms_identify_rotations_and_inverses() {
        let w = Word::from_letters([2, -1, 3]);
        for k in 0..3 {
            assert_eq!(
                w.rotated(k).cyclic_canonical_oriented(),
                w.cyclic_canonical_oriented()
            );
        }
        assert_eq!(
            w.cyclic_canonical_unoriented(),
            w.inverse().cyclic_canonical_unoriented()
        );
    }

    #[test]
    fn substitution_composes() {
        // images of x1,x2 under x1 -> x1 x2, x2 -> x2
        let images = vec![Word::from_letters([1, 2]), Word::generator(2)];
        let w = Word::from_letters([1, -2]);
        assert_eq!(w.substitute(&images).letters(), &[1]);
    }

    #[test]
    fn power_detection() {
        assert!(Word::from_letters([1, 2, 1, 2]).is_cyclic_power());
        assert!(!Word::from_letters([1, 2, 1, -2]).is_cyclic_power());
        assert!(!Word::from_letters([1]).is_cyclic_power());
    }
}
