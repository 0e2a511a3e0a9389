//! Positive relators in twist generators of a closed surface, Hurwitz
//! elementary transformations, replay of equivalence chains, and a bounded
//! breadth-first search oracle.
//!
//! A relator is stored as an ordered list of simple closed curves on the
//! one-holed surface Σ_{g,1}; capping the boundary identifies isotopy
//! classes on the closed surface Σ_{g,0}, where factor equality is decided
//! by the conjugacy normal form of [`crate::closed::ClosedWords`].

use crate::closed::ClosedWords;
use crate::curve::Curve;
use crate::error::EngineError;
use crate::homology::{homology_action, HomologyMatrix};
use crate::mapclass::{twist, MappingClass};
use crate::surface::{SurfaceModel, SurfaceSig};
use crate::word::Word;
use std::collections::{HashMap, HashSet, VecDeque};

/// Shared context for computations on a capped (closed) surface of genus g:
/// the one-holed model used for twist computations together with the
/// word-problem solver for the closed-surface fundamental group.
pub struct CappedSurface {
    pub g: u32,
    pub model: SurfaceModel,
    pub closed: ClosedWords,
}

impl CappedSurface {
    pub fn new(g: u32) -> Result<CappedSurface, EngineError> {
        let model = SurfaceModel::build(SurfaceSig::new(g, 1))?;
        Ok(CappedSurface { g, closed: ClosedWords::new(g), model })
    }

    /// Normal form of a curve's free homotopy class on the closed surface.
    pub fn factor_canonical(&self, c: &Curve) -> Word {
        self.closed.curve_canonical(c.word())
    }

    /// Capped equality of two curves (isotopy on Σ_{g,0}).
    pub fn factors_equal(&self, a: &Curve, b: &Curve) -> bool {
        self.factor_canonical(a) == self.factor_canonical(b)
    }
}

/// An ordered product of right-handed Dehn twists whose composition is
/// claimed to be the identity on the closed surface.
#[derive(Clone, Debug)]
pub struct PositiveRelator {
    pub g: u32,
    pub factors: Vec<Curve>,
}

impl PositiveRelator {
    pub fn new(g: u32, factors: Vec<Curve>) -> PositiveRelator {
        PositiveRelator { g, factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Composition of the factor twists as a mapping class of Σ_{g,1}.
    pub fn compose_all(&self, ctx: &CappedSurface) -> Result<MappingClass, EngineError> {
        let mut out = MappingClass::identity(ctx.model.sig);
        for c in &self.factors {
            out = out.compose(&twist(&ctx.model, c)?)?;
        }
        Ok(out)
    }

    /// Whether the composed product is the identity of the closed mapping
    /// class group. Exact for every g (uses the capped word problem).
    pub fn is_relator(&self, ctx: &CappedSurface) -> Result<bool, EngineError> {
        Ok(ctx.closed.is_identity_capped(&self.compose_all(ctx)?))
    }

    /// Induced action on H₁(Σ_{g,1}) — a fast necessary check that a move
    /// sequence preserved the composed class.
    pub fn homology(&self, ctx: &CappedSurface) -> Result<HomologyMatrix, EngineError> {
        Ok(homology_action(&self.compose_all(ctx)?))
    }

    /// Per-factor normal forms on the closed surface; the replay/search
    /// notion of state identity.
    pub fn canonical_factors(&self, ctx: &CappedSurface) -> Vec<Word> {
        self.factors.iter().map(|c| ctx.factor_canonical(c)).collect()
    }

    pub fn equals(&self, ctx: &CappedSurface, other: &PositiveRelator) -> bool {
        self.g == other.g
            && self.len() == other.len()
            && self.canonical_factors(ctx) == other.canonical_factors(ctx)
    }
}

/// A Hurwitz move on a factor sequence. Indices are 1-based positions i
/// addressing the adjacent pair (c_i, c_{i+1}).
#[derive(Clone, Debug)]
pub enum HurwitzMove {
    /// (c_i, c_{i+1}) ↦ (c_{i+1}, image of c_i under the inverse twist
    /// along c_{i+1}).
    ElemL(usize),
    /// (c_i, c_{i+1}) ↦ (image of c_{i+1} under the twist along c_i, c_i).
    ElemR(usize),
    /// Apply a fixed mapping class to every factor simultaneously.
    GlobalConj(MappingClass),
    /// Cyclic rotation by k (macro: expands to k·(n−1) elementary moves).
    Cyc(usize),
}

#[derive(Debug, thiserror::Error)]
pub enum HurwitzError {
    #[error("move index {0} out of range for relator of length {1}")]
    IndexOutOfRange(usize, usize),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("search resource cap exceeded: {0} states explored")]
    ResourceCap(usize),
}

fn elem_l(ctx: &CappedSurface, rel: &mut PositiveRelator, i: usize) -> Result<(), HurwitzError> {
    let n = rel.len();
    if i == 0 || i >= n {
        return Err(HurwitzError::IndexOutOfRange(i, n));
    }
    let tinv = twist(&ctx.model, &rel.factors[i])?.inverse();
    let moved = tinv.apply(&ctx.model, &rel.factors[i - 1])?;
    rel.factors[i - 1] = rel.factors[i].clone();
    rel.factors[i] = moved;
    Ok(())
}

fn elem_r(ctx: &CappedSurface, rel: &mut PositiveRelator, i: usize) -> Result<(), HurwitzError> {
    let n = rel.len();
    if i == 0 || i >= n {
        return Err(HurwitzError::IndexOutOfRange(i, n));
    }
    let t = twist(&ctx.model, &rel.factors[i - 1])?;
    let moved = t.apply(&ctx.model, &rel.factors[i])?;
    rel.factors[i] = rel.factors[i - 1].clone();
    rel.factors[i - 1] = moved;
    Ok(())
}

/// Applies one Hurwitz move, returning the transformed relator.
pub fn apply_hurwitz(
    ctx: &CappedSurface,
    rel: &PositiveRelator,
    mv: &HurwitzMove,
) -> Result<PositiveRelator, HurwitzError> {
    let mut out = rel.clone();
    match mv {
        HurwitzMove::ElemL(i) => elem_l(ctx, &mut out, *i)?,
        HurwitzMove::ElemR(i) => elem_r(ctx, &mut out, *i)?,
        HurwitzMove::GlobalConj(phi) => {
            for c in &mut out.factors {
                *c = phi.apply(&ctx.model, c)?;
            }
        }
        HurwitzMove::Cyc(k) => {
            let n = out.len();
            if n > 1 {
                for _ in 0..*k {
                    for i in 1..n {
                        elem_l(ctx, &mut out, i)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Applies a sequence of moves and reports whether the result equals the
/// target factor-by-factor (capped isotopy classes).
pub fn replay_equivalence(
    ctx: &CappedSurface,
    start: &PositiveRelator,
    target: &PositiveRelator,
    moves: &[HurwitzMove],
) -> Result<bool, HurwitzError> {
    let mut cur = start.clone();
    for mv in moves {
        cur = apply_hurwitz(ctx, &cur, mv)?;
    }
    Ok(cur.equals(ctx, target))
}

/// Outcome of the bounded search oracle.
#[derive(Debug)]
pub enum SearchOutcome {
    Found(Vec<HurwitzMove>),
    NotFoundWithinBound,
}

/// Breadth-first search over elementary moves only, bounded by depth.
/// Never claims nonequivalence: exhausting the bound yields
/// [`SearchOutcome::NotFoundWithinBound`]. States are canonicalized via
/// per-factor closed-surface normal forms. `state_cap` bounds the explored
/// state count; exceeding it is a distinct error.
pub fn search_equivalence(
    ctx: &CappedSurface,
    r1: &PositiveRelator,
    r2: &PositiveRelator,
    depth: usize,
    state_cap: usize,
) -> Result<SearchOutcome, HurwitzError> {
    if r1.len() != r2.len() || r1.g != r2.g {
        return Ok(SearchOutcome::NotFoundWithinBound);
    }
    let key = |r: &PositiveRelator| -> Vec<Word> { r.canonical_factors(ctx) };
    let target = key(r2);
    if key(r1) == target {
        return Ok(SearchOutcome::Found(Vec::new()));
    }
    let n = r1.len();
    let mut seen: HashSet<Vec<Word>> = HashSet::new();
    let mut queue: VecDeque<(PositiveRelator, Vec<(bool, usize)>)> = VecDeque::new();
    seen.insert(key(r1));
    queue.push_back((r1.clone(), Vec::new()));
    let mut explored = 0usize;
    while let Some((cur, path)) = queue.pop_front() {
        if path.len() >= depth {
            continue;
        }
        for i in 1..n {
            for left in [true, false] {
                let mv = if left { HurwitzMove::ElemL(i) } else { HurwitzMove::ElemR(i) };
                let next = apply_hurwitz(ctx, &cur, &mv)?;
                let k = key(&next);
                if k == target {
                    let mut moves: Vec<HurwitzMove> = path
                        .iter()
                        .map(|&(l, j)| if l { HurwitzMove::ElemL(j) } else { HurwitzMove::ElemR(j) })
                        .collect();
                    moves.push(mv);
                    return Ok(SearchOutcome::Found(moves));
                }
                if seen.insert(k) {
                    explored += 1;
                    if explored > state_cap {
                        return Err(HurwitzError::ResourceCap(explored));
                    }
                    let mut p = path.clone();
                    p.push((left, i));
                    queue.push_back((next, p));
                }
            }
        }
    }
    Ok(SearchOutcome::NotFoundWithinBound)
}

/// The standard twist chain c_1, …, c_{2g+1} on Σ_{g,1}: consecutive curves
/// intersect once, all others are disjoint.
pub fn standard_chain(ctx: &CappedSurface) -> Result<Vec<Curve>, EngineError> {
    let g = ctx.g as i16;
    let mut out = Vec::with_capacity(2 * g as usize + 1);
    for i in 1..=(2 * g + 1) {
        let letters: Vec<i16> = if i == 1 {
            vec![1]
        } else if i == 2 * g + 1 {
            vec![2 * g - 1]
        } else if i % 2 == 0 {
            vec![i]
        } else {
            // odd interior index 2j+1: runs over handle j and around the
            // waist into handle j+1
            vec![i - 2, i - 1, -i, -(i - 1)]
        };
        out.push(Curve::from_word(&ctx.model, &Word::from_letters(letters))?);
    }
    Ok(out)
}

/// The hyperelliptic relator (c_1⋯c_{2g+1}·c_{2g+1}⋯c_1)², of length 8g+4.
pub fn hyperelliptic_relator(ctx: &CappedSurface) -> Result<PositiveRelator, EngineError> {
    let chain = standard_chain(ctx)?;
    let mut half: Vec<Curve> = chain.clone();
    half.extend(chain.iter().rev().cloned());
    let mut factors = half.clone();
    factors.extend(half);
    Ok(PositiveRelator::new(ctx.g, factors))
}

/// Parses a Hurwitz chain file: lines `L <i>`, `R <i>`, `conj <word>`,
/// `cyc <k>`; `#` starts a comment. Symbols in `conj` words resolve through
/// the supplied table; a leading `-` marks an inverse twist.
pub fn parse_chain(
    ctx: &CappedSurface,
    text: &str,
    symbols: &HashMap<String, Curve>,
) -> Result<Vec<HurwitzMove>, String> {
    let mut moves = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let head = it.next().unwrap();
        let rest: Vec<&str> = it.collect();
        let err = |msg: String| format!("line {}: {}", ln + 1, msg);
        match head {
            "L" | "R" => {
                if rest.len() != 1 {
                    return Err(err(format!("`{head}` takes one index")));
                }
                let i: usize = rest[0].parse().map_err(|_| err("bad index".into()))?;
                moves.push(if head == "L" { HurwitzMove::ElemL(i) } else { HurwitzMove::ElemR(i) });
            }
            "cyc" => {
                if rest.len() != 1 {
                    return Err(err("`cyc` takes one count".into()));
                }
                let k: usize = rest[0].parse().map_err(|_| err("bad count".into()))?;
                moves.push(HurwitzMove::Cyc(k));
            }
            "conj" => {
                if rest.is_empty() {
                    return Err(err("`conj` needs a twist word".into()));
                }
                let mut phi = MappingClass::identity(ctx.model.sig);
                for tok in &rest {
                    let (inv, name) = match tok.strip_prefix('-') {
                        Some(n) => (true, n),
                        None => (false, *tok),
                    };
                    let c = symbols
                        .get(name)
                        .ok_or_else(|| err(format!("unknown symbol `{name}`")))?;
                    let t = twist(&ctx.model, c).map_err(|e| err(e.to_string()))?;
                    let t = if inv { t.inverse() } else { t };
                    phi = phi.compose(&t).map_err(|e| err(e.to_string()))?;
                }
                moves.push(HurwitzMove::GlobalConj(phi));
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    Ok(moves)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain_relator_ctx(g: u32) -> (CappedSurface, PositiveRelator) {
        let ctx = CappedSurface::new(g).unwrap();
        let rel = hyperelliptic_relator(&ctx).unwrap();
        (ctx, rel)
    }

    #[test]
    fn standard_chain_intersections() {
        for g in 1..=3 {
            let ctx = CappedSurface::new(g).unwrap();
            let chain = standard_chain(&ctx).unwrap();
            assert_eq!(chain.len(), 2 * g as usize + 1);
            for (i, a) in chain.iter().enumerate() {
                a.certify_simple(&ctx.model).unwrap();
                for (j, b) in chain.iter().enumerate() {
                    if i >= j {
                        continue;
                    }
                    let expect = if j == i + 1 { 1 } else { 0 };
                    assert_eq!(
                        a.geometric_intersection(&ctx.model, b).unwrap(),
                        expect,
                        "g={g} chain pair ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn hyperelliptic_relator_lengths_and_identity() {
        for g in 1..=2u32 {
            let (ctx, rel) = chain_relator_ctx(g);
            assert_eq!(rel.len(), (8 * g + 4) as usize);
            assert!(rel.is_relator(&ctx).unwrap(), "g={g} relator fails");
        }
    }

    #[test]
    fn elementary_moves_preserve_class_and_invert() {
        let (ctx, rel) = chain_relator_ctx(1);
        let before = rel.homology(&ctx).unwrap();
        for i in 1..rel.len().min(5) {
            let l = apply_hurwitz(&ctx, &rel, &HurwitzMove::ElemL(i)).unwrap();
            assert_eq!(l.homology(&ctx).unwrap(), before, "L({i}) changed the class");
            let back = apply_hurwitz(&ctx, &l, &HurwitzMove::ElemR(i)).unwrap();
            assert!(back.equals(&ctx, &rel), "R({i})∘L({i}) ≠ id");
        }
    }

    #[test]
    fn cyc_is_rotation() {
        let (ctx, rel) = chain_relator_ctx(1);
        let rot = apply_hurwitz(&ctx, &rel, &HurwitzMove::Cyc(1)).unwrap();
        let mut expect = rel.factors.clone();
        expect.rotate_left(1);
        let expect = PositiveRelator::new(1, expect);
        assert!(rot.equals(&ctx, &expect));
    }

    #[test]
    fn search_inverts_small_scramble() {
        let (ctx, rel) = chain_relator_ctx(1);
        let scrambled = apply_hurwitz(
            &ctx,
            &apply_hurwitz(&ctx, &rel, &HurwitzMove::ElemL(3)).unwrap(),
            &HurwitzMove::ElemR(5),
        )
        .unwrap();
        match search_equivalence(&ctx, &scrambled, &rel, 3, 200_000).unwrap() {
            SearchOutcome::Found(moves) => {
                assert!(moves.len() <= 2);
                assert!(replay_equivalence(&ctx, &scrambled, &rel, &moves).unwrap());
            }
            SearchOutcome::NotFoundWithinBound => panic!("scramble not inverted"),
        }
    }

    #[test]
    fn chain_file_parses() {
        let ctx = CappedSurface::new(1).unwrap();
        let chain = standard_chain(&ctx).unwrap();
        let mut symbols = HashMap::new();
        for (i, c) in chain.iter().enumerate() {
            symbols.insert(format!("c{}", i + 1), c.clone());
        }
        let text = "# comment\nL 1\nR 2\ncyc 3\nconj c1 -c2\n";
        let moves = parse_chain(&ctx, text, &symbols).unwrap();
        assert_eq!(moves.len(), 4);
        assert!(parse_chain(&ctx, "L x\n", &symbols).is_err());
        assert!(parse_chain(&ctx, "conj d9\n", &symbols).is_err());
    }
}
