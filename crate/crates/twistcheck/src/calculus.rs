//! Twist words, relation statements, certified rewrite moves, and a
//! replayable proof-script checker.
//!
//! A [`TwistWord`] is a word in the free group on catalog symbols; a
//! [`RelationStmt`] `lhs == rhs` asserts that the twist products of the two
//! words are equal as mapping classes. The convention throughout is that
//! the **leftmost letter acts last** (functional order): the product of a
//! word `w_1 … w_n` is `T(w_n) ∘ … ∘ T(w_1)`.
//!
//! Scripts are line-oriented:
//!
//! ```text
//! rel <id>: <word> == <word>     # recall a known relation, or declare a claim
//! commute <pos>                  # swap adjacent disjoint letters
//! subst <rel-id> at <pos> <fwd|rev>
//! conj <word>                    # both sides S -> W̄ S W
//! mulL <word> / mulR <word>      # multiply both sides on a side
//! cyc <k>                        # rotate k letters of the LHS (derived conj)
//! rename <sym> := tw(<word>, <sym>)
//! qed <rel-id>                   # current statement proves the claim <rel-id>
//! ```
//!
//! Positions are 1-based over the concatenation of the two sides (`lhs`
//! first). Both sides are freely reduced after every move. A `rel` whose id
//! is already accepted must restate it verbatim and becomes the working
//! statement; an unknown id declares a claim that a later `qed` must close.
//! `rename` checks against the catalog that the symbol really is the
//! conjugated curve, collapses all occurrences of the expanded pattern, and
//! registers the definition as a substitutable relation `def:<sym>`.

use std::collections::BTreeMap;
use std::fmt;

use crate::catalog::{Catalog, Fact};
use crate::error::ScriptError;
use crate::mapclass::{twist, MappingClass};

/// One letter of a twist word: a catalog symbol with exponent ±1.
pub type Letter = (String, i8);

/// A word in the free group on catalog curve symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistWord {
    letters: Vec<Letter>,
}

impl TwistWord {
    pub fn new(letters: Vec<Letter>) -> TwistWord {
        let mut w = TwistWord { letters };
        w.reduce();
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(s, e)| (s.clone(), -e))
                .collect(),
        }
    }

    fn reduce(&mut self) {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in self.letters.drain(..) {
            if let Some(last) = out.last() {
                if last.0 == l.0 && last.1 == -l.1 {
                    out.pop();
                    continue;
                }
            }
            out.push(l);
        }
        self.letters = out;
    }

    /// Parses whitespace-separated symbols; a leading `-` inverts.
    pub fn parse(text: &str) -> TwistWord {
        TwistWord::new(
            text.split_whitespace()
                .map(|tok| match tok.strip_prefix('-') {
                    Some(s) => (s.to_string(), -1),
                    None => (tok.to_string(), 1),
                })
                .collect(),
        )
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, e) in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if *e < 0 {
                write!(f, "-")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `lhs == rhs`: the twist products of the two words agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationStmt {
    pub lhs: TwistWord,
    pub rhs: TwistWord,
}

impl fmt::Display for RelationStmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} == {}", self.lhs, self.rhs)
    }
}

/// A certified rewrite step.
#[derive(Clone, Debug)]
pub enum Move {
    Commute { pos: usize },
    Subst { id: String, pos: usize, fwd: bool },
    Conj { word: TwistWord },
    MulL { word: TwistWord },
    MulR { word: TwistWord },
    Cyc { k: usize },
    Rename { sym: String, word: TwistWord, of: String },
}

/// One parsed script line.
#[derive(Clone, Debug)]
pub enum Line {
    Rel { id: String, stmt: RelationStmt },
    Step(Move),
    Qed { id: String },
}

/// A parsed proof script (line numbers retained for diagnostics).
#[derive(Clone, Debug)]
pub struct ProofScript {
    pub lines: Vec<(usize, Line)>,
}

/// Accepted relations available for recall and substitution.
#[derive(Clone, Debug, Default)]
pub struct Registry {
    rels: BTreeMap<String, RelationStmt>,
}

impl Registry {
    pub fn new() -> Registry {
        Registry::default()
    }

    /// Seeds `lantern:<gamma>` relations from the catalog's verified
    /// lantern tuples: `d1 d2 d3 d4 == gamma sigma alpha`.
    pub fn with_lanterns(cat: &Catalog) -> Registry {
        let mut reg = Registry::new();
        for t in cat.lantern_tuples() {
            let lhs = TwistWord::new(t[..4].iter().map(|n| (n.clone(), 1)).collect());
            let rhs = TwistWord::new(t[4..].iter().map(|n| (n.clone(), 1)).collect());
            reg.rels
                .insert(format!("lantern:{}", t[4]), RelationStmt { lhs, rhs });
        }
        reg
    }

    pub fn get(&self, id: &str) -> Option<&RelationStmt> {
        self.rels.get(id)
    }

    /// Inserts without any certificate; callers must have checked the
    /// statement themselves (script replay and generation bookkeeping).
    pub(crate) fn insert(&mut self, id: &str, stmt: RelationStmt) {
        self.rels.insert(id.to_string(), stmt);
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.rels.keys().map(|s| s.as_str())
    }

    /// Registers an axiom after verifying it geometrically on the catalog.
    pub fn register_axiom(
        &mut self,
        cat: &Catalog,
        id: &str,
        stmt: RelationStmt,
    ) -> Result<(), ScriptError> {
        if !geometric_verify(&stmt, cat)? {
            return Err(ScriptError::Rejected {
                step: 0,
                msg: format!("axiom `{id}` fails geometric verification"),
            });
        }
        self.rels.insert(id.to_string(), stmt);
        Ok(())
    }

    /// Imports a relation accepted on a sub-surface catalog into this
    /// registry, renaming symbols through `map` (a curve that was a
    /// boundary component below may live on under a new name above, e.g.
    /// a hole whose boundary becomes an interior curve after a split).
    /// The inclusion is certified twice over: all pairwise geometric
    /// intersection numbers must agree across the inclusion, and the
    /// renamed statement must verify geometrically on the larger surface.
    pub fn import_relation(
        &mut self,
        id: &str,
        stmt: &RelationStmt,
        sub: &Catalog,
        sup: &Catalog,
        map: &[(&str, &str)],
    ) -> Result<(), ScriptError> {
        let rename = |s: &str| -> String {
            map.iter()
                .find(|(from, _)| *from == s)
                .map(|(_, to)| to.to_string())
                .unwrap_or_else(|| s.to_string())
        };
        let mut syms: Vec<&str> = stmt
            .lhs
            .letters()
            .iter()
            .chain(stmt.rhs.letters())
            .map(|(s, _)| s.as_str())
            .collect();
        syms.sort_unstable();
        syms.dedup();
        for i in 0..syms.len() {
            for j in i..syms.len() {
                let (a0, b0) = (sub.get_curve(syms[i])?, sub.get_curve(syms[j])?);
                let (a1, b1) = (
                    sup.get_curve(&rename(syms[i]))?,
                    sup.get_curve(&rename(syms[j]))?,
                );
                let below = a0
                    .geometric_intersection(sub.model(), b0)
                    .map_err(|e| ScriptError::Rejected {
                        step: 0,
                        msg: e.to_string(),
                    })?;
                let above = a1
                    .geometric_intersection(sup.model(), b1)
                    .map_err(|e| ScriptError::Rejected {
                        step: 0,
                        msg: e.to_string(),
                    })?;
                if below != above {
                    return Err(ScriptError::Rejected {
                        step: 0,
                        msg: format!(
                            "import `{id}`: i({}, {}) is {below} below but {above} above",
                            syms[i], syms[j]
                        ),
                    });
                }
            }
        }
        let remap = |w: &TwistWord| {
            TwistWord::new(
                w.letters()
                    .iter()
                    .map(|(s, e)| (rename(s), *e))
                    .collect(),
            )
        };
        let mapped = RelationStmt {
            lhs: remap(&stmt.lhs),
            rhs: remap(&stmt.rhs),
        };
        if !geometric_verify(&mapped, sup)? {
            return Err(ScriptError::Rejected {
                step: 0,
                msg: format!("import `{id}`: `{mapped}` fails on the larger surface"),
            });
        }
        self.rels.insert(id.to_string(), mapped);
        Ok(())
    }
}

/// Twist product of a word under the leftmost-acts-last convention.
pub fn varpi(word: &TwistWord, cat: &Catalog) -> Result<MappingClass, ScriptError> {
    let mut acc = MappingClass::identity(cat.surface());
    for (sym, e) in word.letters().iter().rev() {
        let c = cat.get_curve(sym)?;
        let t = twist(cat.model(), c).map_err(|err| ScriptError::Rejected {
            step: 0,
            msg: err.to_string(),
        })?;
        let t = if *e < 0 { t.inverse() } else { t };
        acc = acc.compose(&t).map_err(|err| ScriptError::Rejected {
            step: 0,
            msg: err.to_string(),
        })?;
    }
    Ok(acc)
}

/// Engine-level check of a relation statement, independent of any script.
pub fn geometric_verify(stmt: &RelationStmt, cat: &Catalog) -> Result<bool, ScriptError> {
    Ok(varpi(&stmt.lhs, cat)?.equals(&varpi(&stmt.rhs, cat)?))
}

fn intersection(cat: &Catalog, a: &str, b: &str) -> Result<u64, ScriptError> {
    let ca = cat.get_curve(a)?;
    let cb = cat.get_curve(b)?;
    ca.geometric_intersection(cat.model(), cb)
        .map(|v| v as u64)
        .map_err(|e| ScriptError::Rejected {
            step: 0,
            msg: e.to_string(),
        })
}

/// Side-aware position: resolves a 1-based combined position into
/// (side, index), where side 0 is the LHS.
fn locate(stmt: &RelationStmt, pos: usize) -> Result<(usize, usize), String> {
    if pos == 0 {
        return Err("positions are 1-based".into());
    }
    let nl = stmt.lhs.len();
    if pos <= nl {
        Ok((0, pos - 1))
    } else if pos - nl <= stmt.rhs.len() {
        Ok((1, pos - nl - 1))
    } else {
        Err(format!(
            "position {pos} out of range (lhs {} + rhs {} letters)",
            nl,
            stmt.rhs.len()
        ))
    }
}

fn side_mut(stmt: &mut RelationStmt, side: usize) -> &mut TwistWord {
    if side == 0 {
        &mut stmt.lhs
    } else {
        &mut stmt.rhs
    }
}

/// Applies one move, validating its certificate against the catalog.
pub fn apply_move(
    stmt: &RelationStmt,
    mv: &Move,
    cat: &Catalog,
    reg: &Registry,
) -> Result<RelationStmt, String> {
    let mut out = stmt.clone();
    match mv {
        Move::Commute { pos } => {
            let (side, i) = locate(stmt, *pos)?;
            let w = side_mut(&mut out, side);
            if i + 1 >= w.len() {
                return Err(format!("commute at {pos}: no adjacent letter on that side"));
            }
            let (a, b) = (w.letters[i].clone(), w.letters[i + 1].clone());
            let ival = intersection(cat, &a.0, &b.0).map_err(|e| e.to_string())?;
            if a.0 != b.0 && ival != 0 {
                return Err(format!(
                    "commute at {pos}: i({}, {}) = {ival} ≠ 0",
                    a.0, b.0
                ));
            }
            w.letters.swap(i, i + 1);
        }
        Move::Subst { id, pos, fwd } => {
            let rel = reg
                .get(id)
                .ok_or_else(|| format!("subst: unknown relation `{id}`"))?;
            let (pattern, replacement) = if *fwd {
                (&rel.lhs, &rel.rhs)
            } else {
                (&rel.rhs, &rel.lhs)
            };
            let (side, i) = locate(stmt, *pos)?;
            let w = side_mut(&mut out, side);
            let end = i + pattern.len();
            if end > w.len() || w.letters[i..end] != *pattern.letters() {
                return Err(format!(
                    "subst `{id}` at {pos}: letters do not match `{pattern}`"
                ));
            }
            let tail: Vec<Letter> = w.letters.splice(i..end, replacement.letters().to_vec())
                .collect();
            drop(tail);
        }
        Move::Conj { word } => {
            for side in 0..2 {
                let w = side_mut(&mut out, side);
                let mut letters = word.inverse().letters().to_vec();
                letters.extend(w.letters().iter().cloned());
                letters.extend(word.letters().iter().cloned());
                *w = TwistWord::new(letters);
            }
        }
        Move::MulL { word } => {
            for side in 0..2 {
                let w = side_mut(&mut out, side);
                let mut letters = word.letters().to_vec();
                letters.extend(w.letters().iter().cloned());
                *w = TwistWord::new(letters);
            }
        }
        Move::MulR { word } => {
            for side in 0..2 {
                let w = side_mut(&mut out, side);
                let mut letters = w.letters().to_vec();
                letters.extend(word.letters().iter().cloned());
                *w = TwistWord::new(letters);
            }
        }
        Move::Cyc { k } => {
            if *k > stmt.lhs.len() {
                return Err(format!("cyc {k}: LHS has only {} letters", stmt.lhs.len()));
            }
            let prefix = TwistWord::new(stmt.lhs.letters()[..*k].to_vec());
            return apply_move(stmt, &Move::Conj { word: prefix }, cat, reg);
        }
        Move::Rename { sym, word, of } => {
            // certificate: the named curve is the conjugated curve
            let target = cat.get_curve(sym).map_err(|e| e.to_string())?;
            let source = cat.get_curve(of).map_err(|e| e.to_string())?;
            let phi = varpi(word, cat).map_err(|e| e.to_string())?;
            let image = phi
                .inverse()
                .apply(cat.model(), source)
                .map_err(|e| e.to_string())?;
            if &image != target {
                return Err(format!(
                    "rename: `{sym}` is not the image of `{of}` under [{word}]"
                ));
            }
            // collapse every occurrence of  W of W̄  into  sym
            let mut pattern = word.letters().to_vec();
            pattern.push((of.clone(), 1));
            pattern.extend(word.inverse().letters().iter().cloned());
            for side in 0..2 {
                let w = side_mut(&mut out, side);
                let mut letters = Vec::with_capacity(w.len());
                let src = w.letters().to_vec();
                let mut i = 0;
                while i < src.len() {
                    if i + pattern.len() <= src.len() && src[i..i + pattern.len()] == pattern[..] {
                        letters.push((sym.clone(), 1));
                        i += pattern.len();
                    } else {
                        letters.push(src[i].clone());
                        i += 1;
                    }
                }
                *w = TwistWord::new(letters);
            }
        }
    }
    out.lhs.reduce();
    out.rhs.reduce();
    Ok(out)
}

/// The verdict of replaying a script.
#[derive(Clone, Debug)]
pub enum Verdict {
    /// All steps validated; lists every relation id proved by a `qed`.
    Accepted(Vec<(String, RelationStmt)>),
    /// The script failed at the given source line.
    Rejected { line: usize, reason: String },
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted(_))
    }
}

/// Parses a proof script.
pub fn parse_script(text: &str) -> Result<ProofScript, ScriptError> {
    let mut lines = Vec::new();
    for (ln0, raw) in text.lines().enumerate() {
        let ln = ln0 + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| ScriptError::Parse { line: ln, msg };
        let parsed = if let Some(rest) = line.strip_prefix("rel ") {
            let (id, stmt) = rest
                .split_once(':')
                .ok_or_else(|| err("expected `rel <id>: <word> == <word>`".into()))?;
            let (l, r) = stmt
                .split_once("==")
                .ok_or_else(|| err("expected `==` in relation".into()))?;
            Line::Rel {
                id: id.trim().to_string(),
                stmt: RelationStmt {
                    lhs: TwistWord::parse(l),
                    rhs: TwistWord::parse(r),
                },
            }
        } else if let Some(rest) = line.strip_prefix("commute ") {
            let pos = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("bad position `{rest}`")))?;
            Line::Step(Move::Commute { pos })
        } else if let Some(rest) = line.strip_prefix("subst ") {
            let mut it = rest.split_whitespace();
            let id = it
                .next()
                .ok_or_else(|| err("subst needs a relation id".into()))?;
            if it.next() != Some("at") {
                return Err(err("expected `subst <id> at <pos> <fwd|rev>`".into()));
            }
            let pos = it
                .next()
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| err("bad position".into()))?;
            let fwd = match it.next() {
                Some("fwd") => true,
                Some("rev") => false,
                other => return Err(err(format!("expected fwd|rev, got {other:?}"))),
            };
            Line::Step(Move::Subst {
                id: id.to_string(),
                pos,
                fwd,
            })
        } else if let Some(rest) = line.strip_prefix("conj ") {
            Line::Step(Move::Conj {
                word: TwistWord::parse(rest),
            })
        } else if let Some(rest) = line.strip_prefix("mulL ") {
            Line::Step(Move::MulL {
                word: TwistWord::parse(rest),
            })
        } else if let Some(rest) = line.strip_prefix("mulR ") {
            Line::Step(Move::MulR {
                word: TwistWord::parse(rest),
            })
        } else if let Some(rest) = line.strip_prefix("cyc ") {
            let k = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("bad count `{rest}`")))?;
            Line::Step(Move::Cyc { k })
        } else if let Some(rest) = line.strip_prefix("rename ") {
            // rename <sym> := tw(<word>, <sym2>)
            let (sym, def) = rest
                .split_once(":=")
                .ok_or_else(|| err("expected `rename <sym> := tw(<word>, <sym>)`".into()))?;
            let def = def.trim();
            let inner = def
                .strip_prefix("tw(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| err("expected `tw(<word>, <sym>)`".into()))?;
            let (w, of) = inner
                .rsplit_once(',')
                .ok_or_else(|| err("expected `tw(<word>, <sym>)`".into()))?;
            Line::Step(Move::Rename {
                sym: sym.trim().to_string(),
                word: TwistWord::parse(w),
                of: of.trim().to_string(),
            })
        } else if let Some(rest) = line.strip_prefix("qed") {
            Line::Qed {
                id: rest.trim().to_string(),
            }
        } else {
            return Err(err(format!("unknown directive `{line}`")));
        };
        lines.push((ln, parsed));
    }
    Ok(ProofScript { lines })
}

/// Replays a script against a catalog and a registry of accepted relations.
/// On acceptance, every `qed`-closed relation is added to the registry.
pub fn check_script(script: &ProofScript, cat: &Catalog, reg: &mut Registry) -> Verdict {
    let mut current: Option<RelationStmt> = None;
    let mut claims: BTreeMap<String, RelationStmt> = BTreeMap::new();
    let mut proved: Vec<(String, RelationStmt)> = Vec::new();
    let mut local = reg.clone();
    for (ln, line) in &script.lines {
        match line {
            Line::Rel { id, stmt } => {
                if let Some(known) = local.get(id) {
                    if known != stmt {
                        return Verdict::Rejected {
                            line: *ln,
                            reason: format!(
                                "`{id}` is registered as `{known}`, not `{stmt}`"
                            ),
                        };
                    }
                    current = Some(stmt.clone());
                } else {
                    if claims.insert(id.clone(), stmt.clone()).is_some() {
                        return Verdict::Rejected {
                            line: *ln,
                            reason: format!("claim `{id}` declared twice"),
                        };
                    }
                }
            }
            Line::Step(mv) => {
                let Some(stmt) = current.as_ref() else {
                    return Verdict::Rejected {
                        line: *ln,
                        reason: "no working statement: recall a relation first".into(),
                    };
                };
                match apply_move(stmt, mv, cat, &local) {
                    Ok(next) => current = Some(next),
                    Err(reason) => return Verdict::Rejected { line: *ln, reason },
                }
                if let Move::Rename { sym, word, of } = mv {
                    let mut pattern = word.letters().to_vec();
                    pattern.push((of.clone(), 1));
                    pattern.extend(word.inverse().letters().iter().cloned());
                    local.rels.insert(
                        format!("def:{sym}"),
                        RelationStmt {
                            lhs: TwistWord::new(vec![(sym.clone(), 1)]),
                            rhs: TwistWord::new(pattern),
                        },
                    );
                }
            }
            Line::Qed { id } => {
                let Some(stmt) = current.as_ref() else {
                    return Verdict::Rejected {
                        line: *ln,
                        reason: "qed with no working statement".into(),
                    };
                };
                let Some(claim) = claims.get(id) else {
                    return Verdict::Rejected {
                        line: *ln,
                        reason: format!("qed: `{id}` was never declared"),
                    };
                };
                if claim != stmt {
                    return Verdict::Rejected {
                        line: *ln,
                        reason: format!(
                            "qed `{id}`: current statement is `{stmt}` but the claim is `{claim}`"
                        ),
                    };
                }
                local.rels.insert(id.clone(), claim.clone());
                proved.push((id.clone(), claim.clone()));
            }
        }
    }
    for (id, stmt) in &proved {
        reg.rels.insert(id.clone(), stmt.clone());
    }
    Verdict::Accepted(proved)
}

/// Convenience: parse, then check.
pub fn run_script(text: &str, cat: &Catalog, reg: &mut Registry) -> Result<Verdict, ScriptError> {
    let script = parse_script(text)?;
    Ok(check_script(&script, cat, reg))
}

/// Certified intersection lookup used by external callers (facts are
/// computed by the engine; catalog `intersection` facts are spot checks).
pub fn catalog_intersection_fact(cat: &Catalog, a: &str, b: &str) -> Option<u64> {
    cat.facts().iter().find_map(|f| match f {
        Fact::Intersection { pair, value }
            if (pair.0 == a && pair.1 == b) || (pair.0 == b && pair.1 == a) =>
        {
            Some(*value)
        }
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_catalog;
    use crate::surface::SurfaceSig;

    fn cat5() -> Catalog {
        builtin_catalog(SurfaceSig::new(1, 5)).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let w = TwistWord::parse("a3 -b2 a3 a3");
        assert_eq!(w.to_string(), "a3 -b2 a3 a3");
        assert_eq!(TwistWord::parse("a3 -a3 b2").to_string(), "b2");
    }

    #[test]
    fn commute_requires_disjointness() {
        let cat = cat5();
        let reg = Registry::with_lanterns(&cat);
        let stmt = RelationStmt {
            lhs: TwistWord::parse("a3 a5"),
            rhs: TwistWord::parse("a5 a3"),
        };
        let ok = apply_move(&stmt, &Move::Commute { pos: 1 }, &cat, &reg).unwrap();
        assert_eq!(ok.lhs, ok.rhs);
        let bad = RelationStmt {
            lhs: TwistWord::parse("a3 b2"),
            rhs: TwistWord::parse("a3 b2"),
        };
        assert!(apply_move(&bad, &Move::Commute { pos: 1 }, &cat, &reg).is_err());
    }

    #[test]
    fn lantern_subst_is_seeded_and_checked() {
        let cat = builtin_catalog(SurfaceSig::new(1, 6)).unwrap();
        let reg = Registry::with_lanterns(&cat);
        assert!(reg.get("lantern:gamma").is_some());
        assert!(reg.get("lantern:B.gamma").is_some());
        let stmt = RelationStmt {
            lhs: TwistWord::parse("d4 a1 a3 a8"),
            rhs: TwistWord::parse("d4 a1 a3 a8"),
        };
        let out = apply_move(
            &stmt,
            &Move::Subst {
                id: "lantern:gamma".into(),
                pos: 1,
                fwd: true,
            },
            &cat,
            &reg,
        )
        .unwrap();
        assert_eq!(out.lhs, TwistWord::parse("gamma s3 a9"));
        assert!(geometric_verify(&out, &cat).unwrap());
    }

    #[test]
    fn conj_and_cyc() {
        let cat = cat5();
        let reg = Registry::new();
        let stmt = RelationStmt {
            lhs: TwistWord::parse("a3 b2 a5"),
            rhs: TwistWord::parse("a4 a4"),
        };
        let out = apply_move(&stmt, &Move::Cyc { k: 1 }, &cat, &reg).unwrap();
        assert_eq!(out.lhs, TwistWord::parse("b2 a5 a3"));
        assert_eq!(out.rhs, TwistWord::parse("-a3 a4 a4 a3"));
    }

    #[test]
    fn tiny_script_accepted_and_tamper_rejected() {
        let cat = cat5();
        let mut reg = Registry::with_lanterns(&cat);
        reg.register_axiom(
            &cat,
            "swap",
            RelationStmt {
                lhs: TwistWord::parse("a3 a5"),
                rhs: TwistWord::parse("a5 a3"),
            },
        )
        .unwrap();
        let text = "\
# derive the commuted form with an explicit move
rel goal: a5 a3 == a5 a3
rel swap: a3 a5 == a5 a3
commute 1
qed goal
";
        let verdict = run_script(text, &cat, &mut reg).unwrap();
        assert!(verdict.is_accepted(), "{verdict:?}");
        assert!(reg.get("goal").is_some());

        let bad = text.replace("commute 1", "commute 2");
        let verdict = run_script(&bad, &cat, &mut Registry::with_lanterns(&cat)).unwrap();
        assert!(!verdict.is_accepted());
    }

    #[test]
    fn geometric_verify_detects_inversion() {
        let cat = builtin_catalog(SurfaceSig::new(1, 6)).unwrap();
        let good = RelationStmt {
            lhs: TwistWord::parse("d4 a1 a3 a8"),
            rhs: TwistWord::parse("gamma s3 a9"),
        };
        assert!(geometric_verify(&good, &cat).unwrap());
        let bad = RelationStmt {
            lhs: TwistWord::parse("d4 a1 a3 a8"),
            rhs: TwistWord::parse("gamma -s3 a9"),
        };
        assert!(!geometric_verify(&bad, &cat).unwrap());
    }
}
