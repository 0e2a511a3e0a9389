//! Action of mapping classes on H₁ of the modeled surface.
//!
//! H₁(Σ_{g,r}) ≅ Z^{2g+r−1} in the dual-loop basis. The induced matrix of a
//! mapping class is an independent soundness oracle for the twist
//! construction: the matrix of `twist(c)` must be the transvection
//! x ↦ x + ⟨x, [c]⟩·[c], where ⟨·,·⟩ is the intersection pairing computed
//! from the engine's own signed crossing counts.

use crate::curve::{signed_crossings, Curve};
use crate::mapclass::MappingClass;
use crate::surface::SurfaceModel;
use crate::word::Word;

/// Integer matrix acting on H₁; columns are images of basis vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyMatrix(pub Vec<Vec<i64>>);

impl HomologyMatrix {
    pub fn identity(n: usize) -> Self {
        HomologyMatrix((0..n).map(|i| unit(n, i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let n = self.dim();
        let mut out = vec![0i64; n];
        for (j, col) in self.0.iter().enumerate() {
            for i in 0..n {
                out[i] += col[i] * x[j];
            }
        }
        out
    }

    /// `self · other` (other acts first).
    pub fn mul(&self, other: &HomologyMatrix) -> HomologyMatrix {
        HomologyMatrix(other.0.iter().map(|col| self.apply(col)).collect())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i64 {
        let n = self.dim();
        if n == 0 {
            return 1;
        }
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| self.0[j][i] as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&p| m[p][k] != 0) else {
                    return 0;
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        (sign * m[n - 1][n - 1]) as i64
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[i] = 1;
    v
}

/// Matrix of the induced action on H₁ (column j = class of the image of
/// generator j).
pub fn homology_action(m: &MappingClass) -> HomologyMatrix {
    let n = m.signature().rank();
    HomologyMatrix(
        m.loop_images()
            .iter()
            .map(|w| w.abelianized(n))
            .collect(),
    )
}

/// Intersection pairing on the dual-loop basis, computed from signed
/// crossing counts of the basis curves. `pairing[j][l]` = ⟨x_j, x_l⟩.
pub fn pairing_matrix(model: &SurfaceModel) -> Vec<Vec<i64>> {
    let n = model.sig.rank();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|l| {
                    signed_crossings(
                        model,
                        &Word::generator((j + 1) as i16),
                        &Word::generator((l + 1) as i16),
                    )
                })
                .collect()
        })
        .collect()
}

/// Pairing of two homology classes: xᵀ J y.
pub fn pair(j: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for (a, row) in x.iter().zip(j) {
        for (b, jj) in y.iter().zip(row) {
            s += a * jj * b;
        }
    }
    s
}

/// Transvection matrix x ↦ x + ⟨x, [c]⟩·[c] for the right-handed twist
/// along `c` (sign fixed together with the twist handedness convention).
pub fn transvection(model: &SurfaceModel, c: &Curve) -> HomologyMatrix {
    let n = model.sig.rank();
    let jm = pairing_matrix(model);
    let cls = c.homology_class();
    let cols = (0..n)
        .map(|i| {
            let e = unit(n, i);
            let coef = pair(&jm, &e, &cls);
            let mut col = e;
            for (k, v) in col.iter_mut().enumerate() {
                *v += coef * cls[k];
            }
            col
        })
        .collect();
    HomologyMatrix(cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapclass::twist;
    use crate::surface::{SurfaceModel, SurfaceSig};

    fn model(g: u32, r: u32) -> SurfaceModel {
        SurfaceModel::build(SurfaceSig::new(g, r)).unwrap()
    }

    fn curve(m: &SurfaceModel, letters: &[i16]) -> Curve {
        Curve::from_word(m, &Word::from_letters(letters.iter().copied())).unwrap()
    }

    #[test]
    fn pairing_is_standard_symplectic_block() {
        let m = model(2, 3);
        let j = pairing_matrix(&m);
        let n = m.sig.rank();
        for a in 0..n {
            for b in 0..n {
                // antisymmetric; A_j pairs ±1 with B_j; all else zero
                assert_eq!(j[a][b], -j[b][a], "antisymmetry at ({a},{b})");
                let expected = if a < 4 && b < 4 && a / 2 == b / 2 && a != b {
                    1
                } else {
                    0
                };
                assert_eq!(j[a][b].abs(), expected, "magnitude at ({a},{b})");
            }
        }
        // consistent orientation across handles
        assert_eq!(j[0][1], j[2][3]);
    }

    #[test]
    fn twist_matrix_is_transvection() {
        let m = model(2, 2);
        for letters in [vec![1i16], vec![2], vec![3], vec![4], vec![5], vec![2, 4]] {
            let c = curve(&m, &letters);
            let t = twist(&m, &c).unwrap();
            let act = homology_action(&t);
            assert_eq!(act, transvection(&m, &c), "transvection mismatch for {letters:?}");
            assert_eq!(act.det(), 1);
        }
    }

    #[test]
    fn action_is_functorial() {
        let m = model(1, 2);
        let a = curve(&m, &[1]);
        let b = curve(&m, &[2]);
        let ta = twist(&m, &a).unwrap();
        let tb = twist(&m, &b).unwrap();
        let lhs = homology_action(&ta.compose(&tb).unwrap());
        let rhs = homology_action(&ta).mul(&homology_action(&tb));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn flat_torus_transvection_oracle() {
        // twist((0,1)) must send (1,0) ↦ ±(1,1): the image class of the
        // meridian under the longitude twist picks up one longitude.
        let m = model(1, 1);
        let a = curve(&m, &[1]);
        let b = curve(&m, &[2]);
        let t = twist(&m, &b).unwrap();
        let img = t.apply(&m, &a).unwrap();
        let cls = img.homology_class();
        assert_eq!(cls[0].abs(), 1);
        assert_eq!(cls[1].abs(), 1);
    }
}
