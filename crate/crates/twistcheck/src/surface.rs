//! Combinatorial model of a compact oriented surface Σ_{g,r} with boundary.
//!
//! The surface is presented as a single polygon (one 2-cell) whose boundary
//! word, read counterclockwise, is
//!
//! ```text
//!   a_1 b_1 a_1⁻¹ b_1⁻¹ … a_g b_g a_g⁻¹ b_g⁻¹ · (e_2 d_2 e_2⁻¹) … (e_r d_r e_r⁻¹) · d_1
//! ```
//!
//! Sides labeled `a_j, b_j, e_i` come in identified pairs (the spine edges);
//! sides `d_1, …, d_r` are free and form the r boundary components, each
//! carrying one marked point in its interior. The surface deformation
//! retracts to the spine, so the fundamental group based at the marked point
//! m_1 on d_1 is free of rank `2g + r − 1`, generated by the loops dual to
//! the spine edges: crossing the side labeled `x` (outbound) spells the
//! letter `x`. Transverse curves and arcs are recorded by their crossing
//! sequences against the spine; since the polygon is a disk, a reduced
//! crossing word is a complete homotopy invariant.
//!
//! Orientation convention: the polygon is oriented counterclockwise; all
//! cyclic-order computations (and hence the handedness of Dehn twists built
//! on top of them) refer to this orientation.

use crate::error::EngineError;
use crate::word::{Letter, Word};
use serde::{Deserialize, Serialize};

/// Genus and boundary count of a surface Σ_{g,r}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SurfaceSig {
    pub genus: u32,
    pub boundary: u32,
}

impl SurfaceSig {
    pub fn new(genus: u32, boundary: u32) -> Self {
        SurfaceSig { genus, boundary }
    }

    /// Rank of the free fundamental group, `2g + r − 1` (surfaces with
    /// boundary only).
    pub fn rank(&self) -> usize {
        2 * self.genus as usize + self.boundary as usize - 1
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary as i64
    }
}

impl std::fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Σ_{{{},{}}}", self.genus, self.boundary)
    }
}

/// One side of the model polygon.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// Identified side; crossing it outbound spells this letter.
    Glued(Letter),
    /// Free side lying on the given boundary component (1-based).
    Free(u32),
}

/// The polygon model of Σ_{g,r} with r ≥ 1.
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub sig: SurfaceSig,
    /// Polygon sides in counterclockwise order.
    pub sides: Vec<Side>,
    /// `exit[k-1]` = side index spelled `+k`; its partner spells `-k`.
    exit_pos: Vec<usize>,
    exit_neg: Vec<usize>,
    /// `free[i-1]` = side index of the free side on boundary component i.
    free: Vec<usize>,
    /// Reduced words of curves parallel to each boundary component.
    boundary_words: Vec<Word>,
}

impl SurfaceModel {
    /// Builds the canonical model; deterministic for a fixed signature.
    pub fn build(sig: SurfaceSig) -> Result<SurfaceModel, EngineError> {
        if sig.boundary == 0 {
            return Err(EngineError::ClosedSurfaceModel(sig));
        }
        let g = sig.genus as usize;
        let r = sig.boundary as usize;
        let mut sides = Vec::new();
        for j in 0..g {
            let a = (2 * j + 1) as Letter;
            let b = (2 * j + 2) as Letter;
            sides.extend([Side::Glued(a), Side::Glued(b), Side::Glued(-a), Side::Glued(-b)]);
        }
        for i in 2..=r {
            let e = (2 * g + i - 1) as Letter;
            sides.extend([Side::Glued(e), Side::Free(i as u32), Side::Glued(-e)]);
        }
        sides.push(Side::Free(1));

        let n = sig.rank();
        let mut exit_pos = vec![usize::MAX; n];
        let mut exit_neg = vec![usize::MAX; n];
        let mut free = vec![usize::MAX; r];
        for (idx, s) in sides.iter().enumerate() {
            match *s {
                Side::Glued(l) if l > 0 => exit_pos[(l - 1) as usize] = idx,
                Side::Glued(l) => exit_neg[(-l - 1) as usize] = idx,
                Side::Free(b) => free[(b - 1) as usize] = idx,
            }
        }

        let mut model = SurfaceModel {
            sig,
            sides,
            exit_pos,
            exit_neg,
            free,
            boundary_words: Vec::new(),
        };
        model.boundary_words = (1..=r as u32).map(|i| model.trace_boundary(i)).collect();
        Ok(model)
    }

    pub fn side_count(&self) -> usize {
        self.sides.len()
    }

    /// Side through which a strand spelling `letter` exits the polygon.
    pub fn exit_side(&self, letter: Letter) -> usize {
        if letter > 0 {
            self.exit_pos[(letter - 1) as usize]
        } else {
            self.exit_neg[(-letter - 1) as usize]
        }
    }

    /// Side through which a strand spelling `letter` enters the next tile.
    pub fn entry_side(&self, letter: Letter) -> usize {
        self.exit_side(-letter)
    }

    pub fn free_side(&self, boundary: u32) -> usize {
        self.free[(boundary - 1) as usize]
    }

    /// Reduced word of a simple closed curve parallel to boundary
    /// component `i`, pushed into the interior.
    pub fn boundary_word(&self, boundary: u32) -> &Word {
        &self.boundary_words[(boundary - 1) as usize]
    }

    /// Walks along boundary component `i`, recording the spine edges a
    /// pushed-in parallel curve crosses.
    fn trace_boundary(&self, boundary: u32) -> Word {
        let m = self.side_count();
        let f0 = self.free_side(boundary);
        let mut letters = Vec::new();
        let mut k = (f0 + 1) % m;
        let mut guard = 0;
        while k != f0 {
            match self.sides[k] {
                Side::Free(_) => {
                    // Another free side on the same boundary circle; the
                    // parallel curve slides past without crossing anything.
                    k = (k + 1) % m;
                }
                Side::Glued(x) => {
                    letters.push(x);
                    k = (self.exit_side(-x) + 1) % m;
                }
            }
            guard += 1;
            assert!(guard <= 4 * m, "boundary trace failed to close up");
        }
        Word::from_letters(letters)
    }

    /// Number of vertices of the glued CW-complex (corner classes of the
    /// polygon under the side identifications). Used as an independent
    /// Euler-characteristic oracle in tests.
    pub fn vertex_count(&self) -> usize {
        let m = self.side_count();
        // corner k sits between side k-1 and side k (indices mod m);
        // side s spans corners s .. s+1.
        let mut dsu: Vec<usize> = (0..m).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let r = find(dsu, dsu[x]);
                dsu[x] = r;
            }
            dsu[x]
        }
        let union = |dsu: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(dsu, a), find(dsu, b));
            if ra != rb {
                dsu[ra] = rb;
            }
        };
        for (s, side) in self.sides.iter().enumerate() {
            if let Side::Glued(x) = *side {
                if x > 0 {
                    let p = self.exit_side(-x);
                    // orientation-reversing identification of the two sides
                    union(&mut dsu, s, (p + 1) % m);
                    union(&mut dsu, (s + 1) % m, p);
                }
            }
        }
        let mut roots: Vec<usize> = (0..m).map(|k| find(&mut dsu, k)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// Edge count of the glued CW-complex.
    pub fn edge_count(&self) -> usize {
        self.sig.rank() + self.sig.boundary as usize
    }
}
