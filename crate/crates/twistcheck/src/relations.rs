//! Script-checked derivations of the two eight-holed torus relations.
//!
//! Each relation is proved in stages, one surface at a time. A base
//! relation on a small-holed torus is registered as a geometrically
//! verified axiom; every later stage imports the previous stage's relation
//! across a boundary split (renaming the split boundary curve to its
//! interior successor) and derives the next relation with certified
//! rewrite moves, trading the transported boundary curve against a fresh
//! lantern relation. The final stages land on Σ_{1,8}:
//!
//! * family `A` (bare names): `a1 a2 d1 … d6 == a5 a4 b2 ā4 s1 s4 a10 …`
//! * family `B` (`B.`-prefixed names): `B.a1 B.a2 B.a7 B.a8 B.d1 … B.d4 == …`
//!
//! The shipped `.proof` scripts under `scripts/` replay stage by stage
//! through the independent parser/checker ([`verify_relation`]). The same
//! derivations can be regenerated move by move ([`generate_relation_scripts`]);
//! the generator pushes every move through [`apply_move`], so a generated
//! script is certified while it is being written, and the pipeline still
//! re-runs the emitted text through the parser as a second opinion.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::calculus::{
    apply_move, check_script, parse_script, Move, Registry, RelationStmt, TwistWord, Verdict,
};
use crate::catalog::{load_catalog, Catalog};
use crate::error::ScriptError;
use crate::surface::SurfaceSig;

/// The two relation families on the eight-holed torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationFamily {
    A,
    B,
}

impl RelationFamily {
    pub fn tag(self) -> &'static str {
        match self {
            RelationFamily::A => "a",
            RelationFamily::B => "b",
        }
    }
}

const LHS: usize = 0;
const RHS: usize = 1;

fn stmt(lhs: &str, rhs: &str) -> RelationStmt {
    RelationStmt {
        lhs: TwistWord::parse(lhs),
        rhs: TwistWord::parse(rhs),
    }
}

/// One derivation stage: which surface it runs on, the relation id it
/// proves, and the renaming used to import the previous stage's relation
/// (a boundary curve that becomes interior keeps its geometry but changes
/// its catalog name).
pub struct StageSpec {
    pub r: u32,
    pub proves: &'static str,
    pub import_map: &'static [(&'static str, &'static str)],
}

/// The base axiom of a family: surface, registry id, statement.
pub fn relation_axiom(family: RelationFamily) -> (u32, &'static str, RelationStmt) {
    match family {
        RelationFamily::A => (
            5,
            "fivehole",
            stmt(
                "d2 d1 a2 gamma d3",
                "a5 b2 a3 a4 a5 b2 s1 a6 a3 b2 s2 a8",
            ),
        ),
        RelationFamily::B => (
            4,
            "fourhole",
            stmt(
                "B.a2 B.a1 B.a7 B.gamma",
                "B.a3 B.a6 B.b2 B.a4 B.a5 B.b2 B.a3 B.a6 B.b2 B.a4 B.a5 B.b2",
            ),
        ),
    }
}

pub fn relation_stages(family: RelationFamily) -> &'static [StageSpec] {
    match family {
        RelationFamily::A => &[
            StageSpec { r: 5, proves: "A0", import_map: &[] },
            StageSpec { r: 6, proves: "A1", import_map: &[] },
            StageSpec { r: 7, proves: "A2", import_map: &[("d2", "gamma'")] },
            StageSpec { r: 8, proves: "A", import_map: &[("a1", "gamma''")] },
        ],
        RelationFamily::B => &[
            StageSpec { r: 5, proves: "B1", import_map: &[] },
            StageSpec { r: 6, proves: "B2", import_map: &[("B.a1", "B.gamma'")] },
            StageSpec { r: 7, proves: "B3", import_map: &[("B.a8", "B.gamma''")] },
            StageSpec { r: 8, proves: "B", import_map: &[("B.a1", "B.gamma'''")] },
        ],
    }
}

/// Canonical script file name for a stage, relative to `data_dir/scripts`.
pub fn script_file_name(family: RelationFamily, r: u32) -> String {
    format!("relation_{}_g1_r{}.proof", family.tag(), r)
}

// ---------------------------------------------------------------------------
// Script builder: applies moves while emitting script text.
// ---------------------------------------------------------------------------

/// Builds a proof script move by move. Every emitted line is applied
/// through [`apply_move`] against the catalog at build time, so an error
/// surfaces at the exact step instead of at replay.
pub struct ScriptBuilder<'a> {
    cat: &'a Catalog,
    reg: Registry,
    claims: BTreeMap<String, RelationStmt>,
    stmt: Option<RelationStmt>,
    lines: Vec<String>,
    proved: Vec<(String, RelationStmt)>,
}

impl<'a> ScriptBuilder<'a> {
    pub fn new(cat: &'a Catalog, reg: &Registry) -> ScriptBuilder<'a> {
        ScriptBuilder {
            cat,
            reg: reg.clone(),
            claims: BTreeMap::new(),
            stmt: None,
            lines: Vec::new(),
            proved: Vec::new(),
        }
    }

    pub fn text(&self) -> String {
        let mut t = self.lines.join("\n");
        t.push('\n');
        t
    }

    pub fn proved(&self) -> &[(String, RelationStmt)] {
        &self.proved
    }

    pub fn comment(&mut self, c: &str) {
        self.lines.push(format!("# {c}"));
    }

    pub fn blank(&mut self) {
        self.lines.push(String::new());
    }

    fn current(&self) -> Result<&RelationStmt, String> {
        self.stmt.as_ref().ok_or_else(|| "no working statement".into())
    }

    fn side(&self, side: usize) -> Result<&TwistWord, String> {
        let s = self.current()?;
        Ok(if side == LHS { &s.lhs } else { &s.rhs })
    }

    fn pos_base(&self, side: usize) -> Result<usize, String> {
        Ok(if side == LHS { 0 } else { self.current()?.lhs.len() })
    }

    fn apply(&mut self, mv: Move, line: String) -> Result<(), String> {
        let next = apply_move(self.current()?, &mv, self.cat, &self.reg)
            .map_err(|e| format!("`{line}`: {e}"))?;
        if let Move::Rename { sym, word, of } = &mv {
            let mut pattern = word.letters().to_vec();
            pattern.push((of.clone(), 1));
            pattern.extend(word.inverse().letters().iter().cloned());
            self.reg.insert(
                &format!("def:{sym}"),
                RelationStmt {
                    lhs: TwistWord::new(vec![(sym.clone(), 1)]),
                    rhs: TwistWord::new(pattern),
                },
            );
        }
        self.stmt = Some(next);
        self.lines.push(line);
        Ok(())
    }

    /// Declares a claim to be closed by a later `qed`.
    pub fn claim(&mut self, id: &str, target: RelationStmt) -> Result<(), String> {
        if self.reg.get(id).is_some() {
            return Err(format!("claim `{id}` is already registered"));
        }
        self.lines.push(format!("rel {id}: {target}"));
        self.claims.insert(id.to_string(), target);
        Ok(())
    }

    /// Recalls a registered relation as the working statement.
    pub fn recall(&mut self, id: &str) -> Result<(), String> {
        let s = self
            .reg
            .get(id)
            .ok_or_else(|| format!("recall: unknown relation `{id}`"))?
            .clone();
        self.lines.push(format!("rel {id}: {s}"));
        self.stmt = Some(s);
        Ok(())
    }

    pub fn qed(&mut self, id: &str) -> Result<(), String> {
        let claim = self
            .claims
            .get(id)
            .ok_or_else(|| format!("qed: claim `{id}` was never declared"))?;
        let got = self.current()?;
        if got != claim {
            return Err(format!("qed `{id}`: reached `{got}`, claimed `{claim}`"));
        }
        let claim = claim.clone();
        self.lines.push(format!("qed {id}"));
        self.reg.insert(id, claim.clone());
        self.proved.push((id.to_string(), claim));
        Ok(())
    }

    /// Swaps the letters at combined 1-based positions `pos`, `pos + 1`.
    pub fn commute(&mut self, pos: usize) -> Result<(), String> {
        self.apply(Move::Commute { pos }, format!("commute {pos}"))
    }

    /// Swaps the first adjacent occurrence of `a b` on a side.
    pub fn commute_adj(&mut self, side: usize, a: &str, b: &str) -> Result<(), String> {
        let la = parse_letter(a)?;
        let lb = parse_letter(b)?;
        let letters = self.side(side)?.letters().to_vec();
        let i = (0..letters.len().saturating_sub(1))
            .find(|&i| letters[i] == la && letters[i + 1] == lb)
            .ok_or_else(|| format!("no adjacent `{a} {b}` on side {side}"))?;
        let pos = self.pos_base(side)? + i + 1;
        self.commute(pos)
    }

    /// Reorders one side into `target` (a permutation of its letters) by
    /// adjacent transpositions; every swap is certified as usual.
    pub fn reorder(&mut self, side: usize, target: &[&str]) -> Result<(), String> {
        let want: Vec<(String, i8)> = target
            .iter()
            .map(|t| parse_letter(t))
            .collect::<Result<_, _>>()?;
        if self.side(side)?.len() != want.len() {
            return Err(format!(
                "reorder: side has {} letters, target {}",
                self.side(side)?.len(),
                want.len()
            ));
        }
        for k in 0..want.len() {
            let letters = self.side(side)?.letters().to_vec();
            let j = (k..letters.len())
                .find(|&j| letters[j] == want[k])
                .ok_or_else(|| format!("reorder: `{}` not found", target[k]))?;
            let base = self.pos_base(side)?;
            for p in ((k + 1)..=j).rev() {
                self.commute(base + p)?;
            }
        }
        Ok(())
    }

    pub fn conj(&mut self, word: &str) -> Result<(), String> {
        self.apply(
            Move::Conj {
                word: TwistWord::parse(word),
            },
            format!("conj {word}"),
        )
    }

    /// Conjugates both sides by `word` and cancels the inserted prefix and
    /// suffix on the LHS again, assuming every letter of `word` commutes
    /// with every LHS letter. Net effect: the LHS is unchanged and the RHS
    /// is conjugated (for a cyclic RHS word, rotated).
    pub fn conj_cancel_lhs(&mut self, word: &str) -> Result<(), String> {
        let w = TwistWord::parse(word);
        let llen = self.side(LHS)?.len();
        let wlen = w.len();
        self.conj(word)?;
        if self.side(LHS)?.len() != llen + 2 * wlen {
            return Err(format!("conj {word}: unexpected cancellation on the LHS"));
        }
        for i in 0..wlen {
            // first letter of the remaining suffix copy of `word`
            let start = (wlen - i) + llen;
            for step in 0..llen {
                self.commute(start - step)?;
            }
            let expect = llen + 2 * (wlen - i - 1);
            if self.side(LHS)?.len() != expect {
                return Err(format!(
                    "conj {word}: letter {i} did not cancel against its inverse"
                ));
            }
        }
        Ok(())
    }

    pub fn mul_l(&mut self, word: &str) -> Result<(), String> {
        self.apply(
            Move::MulL {
                word: TwistWord::parse(word),
            },
            format!("mulL {word}"),
        )
    }

    pub fn mul_r(&mut self, word: &str) -> Result<(), String> {
        self.apply(
            Move::MulR {
                word: TwistWord::parse(word),
            },
            format!("mulR {word}"),
        )
    }

    /// Substitutes at the first occurrence of the pattern on a side.
    pub fn subst_first(&mut self, id: &str, side: usize, fwd: bool) -> Result<(), String> {
        let rel = self
            .reg
            .get(id)
            .ok_or_else(|| format!("subst: unknown relation `{id}`"))?;
        let pattern = if fwd { rel.lhs.clone() } else { rel.rhs.clone() };
        let letters = self.side(side)?.letters().to_vec();
        let plen = pattern.len();
        let i = (0..=letters.len().saturating_sub(plen))
            .find(|&i| letters[i..i + plen] == *pattern.letters())
            .ok_or_else(|| format!("subst `{id}`: pattern `{pattern}` not found"))?;
        let pos = self.pos_base(side)? + i + 1;
        let dir = if fwd { "fwd" } else { "rev" };
        self.apply(
            Move::Subst {
                id: id.to_string(),
                pos,
                fwd,
            },
            format!("subst {id} at {pos} {dir}"),
        )
    }

    pub fn rename(&mut self, sym: &str, word: &str, of: &str) -> Result<(), String> {
        self.apply(
            Move::Rename {
                sym: sym.to_string(),
                word: TwistWord::parse(word),
                of: of.to_string(),
            },
            format!("rename {sym} := tw({word}, {of})"),
        )
    }
}

fn parse_letter(tok: &str) -> Result<(String, i8), String> {
    let w = TwistWord::parse(tok);
    if w.len() != 1 {
        return Err(format!("expected a single letter, got `{tok}`"));
    }
    Ok(w.letters()[0].clone())
}

// ---------------------------------------------------------------------------
// The stage derivations.
// ---------------------------------------------------------------------------

fn build_a_stage(r: u32, b: &mut ScriptBuilder) -> Result<(), String> {
    match r {
        5 => {
            b.comment("five-holed base relation, rearranged so that one");
            b.comment("boundary twist is isolated on the right");
            b.claim(
                "A0",
                stmt(
                    "a2 d1 d2 d3",
                    "a8 a3 a4 a5 b2 s1 a6 a3 b2 s2 a5 a8 b2 -a8 -gamma",
                ),
            )?;
            b.recall("fivehole")?;
            b.reorder(LHS, &["a2", "d1", "d2", "d3", "gamma"])?;
            b.conj_cancel_lhs("a5")?;
            b.commute_adj(RHS, "a8", "a5")?;
            b.conj_cancel_lhs("-a8")?;
            b.conj_cancel_lhs("a8 b2 -a8")?;
            b.mul_r("-gamma")?;
            b.qed("A0")
        }
        6 => {
            b.comment("split the gamma hole: trade the transported gamma");
            b.comment("curve against the fresh lantern");
            b.claim(
                "A1",
                stmt(
                    "a1 a2 d1 d2 d3 d4",
                    "a4 a5 b2 s1 a6 a3 b2 s2 a5 a8 b2 -a8 s3 a9",
                ),
            )?;
            b.recall("A0")?;
            b.mul_r("d4 a1 a3 a8")?;
            b.subst_first("lantern:gamma", RHS, true)?;
            b.reorder(LHS, &["a8", "a3", "a1", "a2", "d1", "d2", "d3", "d4"])?;
            b.mul_l("-a3 -a8")?;
            b.qed("A1")
        }
        7 => {
            b.comment("split the d2 hole (imported with d2 renamed to gamma');");
            b.comment("rotate the right side so that s1 trails, shielded by -a4");
            b.claim(
                "A2",
                stmt(
                    "a1 a2 d1 d2 d3 d4 d5",
                    "a3 b2 s2 a5 a8 b2 -a8 s3 a9 a5 a4 b2 -a4 s1 s4 a10",
                ),
            )?;
            b.recall("A1")?;
            b.commute_adj(RHS, "a4", "a5")?;
            b.conj_cancel_lhs("a5 a4 b2")?;
            b.conj_cancel_lhs("s1")?;
            b.rename("s1", "-a4", "s1")?;
            b.subst_first("def:s1", RHS, true)?;
            b.conj_cancel_lhs("-a4")?;
            b.mul_r("s4 a10")?;
            b.reorder(LHS, &["a1", "a2", "d1", "d3", "d4", "gamma'", "s4", "a10"])?;
            b.subst_first("lantern:gamma'", LHS, false)?;
            b.reorder(LHS, &["a4", "a6", "a1", "a2", "d1", "d2", "d3", "d4", "d5"])?;
            b.mul_l("-a6 -a4")?;
            b.qed("A2")
        }
        8 => {
            b.comment("split the a1 hole (imported with a1 renamed to gamma'');");
            b.comment("shield s2 and s3 with a3 conjugates before rotating");
            b.claim(
                "A",
                stmt(
                    "a1 a2 d1 d2 d3 d4 d5 d6",
                    "a5 a4 b2 -a4 s1 s4 a10 a3 b2 -a3 s2 a5 a3 a8 b2 -a8 -a3 s3 s5 a11",
                ),
            )?;
            b.recall("A2")?;
            b.rename("s2", "-a3", "s2")?;
            b.subst_first("def:s2", RHS, true)?;
            b.commute_adj(RHS, "a3", "a5")?;
            b.rename("s3", "-a3", "s3")?;
            b.subst_first("def:s3", RHS, true)?;
            b.conj_cancel_lhs("a3 b2 -a3 s2 a5 a3 a8 b2 -a8 -a3 s3")?;
            b.mul_r("s5 a11")?;
            b.reorder(
                LHS,
                &["a2", "d1", "d2", "d3", "d4", "d5", "gamma''", "s5", "a11"],
            )?;
            b.subst_first("lantern:gamma''", LHS, false)?;
            b.reorder(
                LHS,
                &["a3", "a9", "a1", "a2", "d1", "d2", "d3", "d4", "d5", "d6"],
            )?;
            b.mul_l("-a9 -a3")?;
            b.qed("A")
        }
        _ => Err(format!("no stage for r = {r}")),
    }
}

fn build_b_stage(r: u32, b: &mut ScriptBuilder) -> Result<(), String> {
    match r {
        5 => {
            b.comment("four-holed base relation extended across the first split");
            b.claim(
                "B1",
                stmt(
                    "B.a1 B.a2 B.a7 B.a8 B.d1",
                    "B.a4 B.a5 B.b2 B.a6 B.a3 B.b2 -B.a6 B.tau B.a5' B.a4 B.b2 B.a3 B.a6 B.b2",
                ),
            )?;
            b.recall("fourhole")?;
            b.reorder(LHS, &["B.a1", "B.a2", "B.a7", "B.gamma"])?;
            b.conj_cancel_lhs("B.a3 B.a6 B.b2")?;
            b.mul_r("-B.gamma")?;
            b.mul_r("B.d1 B.a8 B.a6 B.a5")?;
            b.subst_first("lantern:B.gamma", RHS, true)?;
            b.reorder(
                LHS,
                &["B.a1", "B.a2", "B.a7", "B.a8", "B.d1", "B.a6", "B.a5"],
            )?;
            b.mul_r("-B.a5 -B.a6")?;
            b.commute_adj(RHS, "-B.a5", "-B.a6")?;
            b.commute_adj(RHS, "B.a5'", "-B.a6")?;
            b.commute_adj(RHS, "B.tau", "-B.a6")?;
            b.conj_cancel_lhs("B.a5")?;
            b.commute_adj(RHS, "-B.a5", "B.a4")?;
            b.conj_cancel_lhs("B.a4 B.b2 B.a3 B.a6 B.b2")?;
            b.commute_adj(RHS, "B.a3", "B.a6")?;
            b.qed("B1")
        }
        6 => {
            b.comment("split the a1 hole (imported with a1 renamed to gamma')");
            b.claim(
                "B2",
                stmt(
                    "B.a1 B.a2 B.a7 B.a8 B.d1 B.d2",
                    "B.b2 B.a6 B.a3 B.b2 -B.a3 B.tau' B.a4' B.a5 B.b2 B.a6 B.a3 B.b2 \
                     -B.a6 B.tau B.a5' B.a4",
                ),
            )?;
            b.recall("B1")?;
            b.reorder(LHS, &["B.a2", "B.a7", "B.a8", "B.d1", "B.gamma'"])?;
            b.mul_r("-B.gamma'")?;
            b.mul_r("B.a4 B.a3 B.a1 B.d2")?;
            b.subst_first("lantern:B.gamma'", RHS, true)?;
            b.reorder(
                LHS,
                &["B.a4", "B.a3", "B.a2", "B.a7", "B.a8", "B.d1", "B.a1", "B.d2"],
            )?;
            b.mul_l("-B.a3 -B.a4")?;
            b.reorder(LHS, &["B.a1", "B.a2", "B.a7", "B.a8", "B.d1", "B.d2"])?;
            b.conj_cancel_lhs("-B.a3")?;
            b.commute_adj(RHS, "B.a4'", "-B.a3")?;
            b.commute_adj(RHS, "B.tau'", "-B.a3")?;
            b.commute_adj(RHS, "B.a3", "B.a6")?;
            b.conj_cancel_lhs("B.a5 B.b2 B.a6 B.a3 B.b2 -B.a6 B.tau B.a5' B.a4")?;
            b.qed("B2")
        }
        7 => {
            b.comment("split the a8 hole (imported with a8 renamed to gamma'')");
            b.claim(
                "B3",
                stmt(
                    "B.a1 B.a2 B.a7 B.a8 B.d1 B.d2 B.d3",
                    "B.b2 B.a3 B.a6 B.b2 -B.a6 B.tau B.tau'' B.a4 B.a5'' -B.a6 B.b2 \
                     B.a6 B.a3 B.b2 -B.a3 B.tau' B.a4' B.a5",
                ),
            )?;
            b.recall("B2")?;
            b.reorder(
                LHS,
                &["B.a1", "B.a2", "B.a7", "B.d1", "B.d2", "B.gamma''"],
            )?;
            b.mul_r("-B.gamma''")?;
            b.mul_r("B.d3 B.a8 B.a6 B.a5'")?;
            b.subst_first("lantern:B.gamma''", RHS, true)?;
            b.reorder(
                LHS,
                &[
                    "B.a1", "B.a2", "B.a7", "B.a8", "B.d1", "B.d2", "B.d3", "B.a6", "B.a5'",
                ],
            )?;
            b.mul_r("-B.a5' -B.a6")?;
            b.commute_adj(RHS, "B.a5''", "-B.a5'")?;
            b.commute_adj(RHS, "B.tau''", "-B.a5'")?;
            b.commute_adj(RHS, "B.a4", "-B.a5'")?;
            b.commute_adj(RHS, "B.a4", "B.tau''")?;
            b.conj_cancel_lhs("B.b2 B.a6 B.a3 B.b2 -B.a3 B.tau' B.a4' B.a5")?;
            b.commute_adj(RHS, "B.a6", "B.a3")?;
            b.qed("B3")
        }
        8 => {
            b.comment("split the a1 hole again (imported with a1 renamed to gamma''')");
            b.claim(
                "B",
                stmt(
                    "B.a1 B.a2 B.a7 B.a8 B.d1 B.d2 B.d3 B.d4",
                    "B.a4 B.a5'' -B.a6 B.b2 B.a6 B.a3 B.b2 -B.a3 B.tau' B.tau''' B.a5 \
                     B.a4'' -B.a3 B.b2 B.a3 B.a6 B.b2 -B.a6 B.tau B.tau''",
                ),
            )?;
            b.recall("B3")?;
            b.reorder(
                LHS,
                &[
                    "B.a2", "B.a7", "B.a8", "B.d1", "B.d2", "B.d3", "B.gamma'''",
                ],
            )?;
            b.mul_r("-B.gamma'''")?;
            b.mul_r("B.d4 B.a1 B.a3 B.a4'")?;
            b.subst_first("lantern:B.gamma'''", RHS, true)?;
            b.reorder(
                LHS,
                &[
                    "B.a1", "B.a2", "B.a7", "B.a8", "B.d1", "B.d2", "B.d3", "B.d4", "B.a3",
                    "B.a4'",
                ],
            )?;
            b.mul_r("-B.a4' -B.a3")?;
            b.commute_adj(RHS, "B.a4''", "-B.a4'")?;
            b.commute_adj(RHS, "B.tau'''", "-B.a4'")?;
            b.commute_adj(RHS, "B.a5", "-B.a4'")?;
            b.commute_adj(RHS, "B.a5", "B.tau'''")?;
            b.conj_cancel_lhs("B.b2 B.a3 B.a6 B.b2 -B.a6 B.tau B.tau''")?;
            b.qed("B")
        }
        _ => Err(format!("no stage for r = {r}")),
    }
}

fn build_stage(
    family: RelationFamily,
    r: u32,
    cat: &Catalog,
    reg: &Registry,
) -> Result<String, ScriptError> {
    let mut b = ScriptBuilder::new(cat, reg);
    let res = match family {
        RelationFamily::A => build_a_stage(r, &mut b),
        RelationFamily::B => build_b_stage(r, &mut b),
    };
    res.map_err(|msg| ScriptError::Rejected {
        step: 0,
        msg: format!("building {:?} stage r={r}: {msg}", family),
    })?;
    Ok(b.text())
}

// ---------------------------------------------------------------------------
// Pipelines.
// ---------------------------------------------------------------------------

fn reject(msg: String) -> ScriptError {
    ScriptError::Rejected { step: 0, msg }
}

/// Runs all stages of a family. `script_text` supplies the script for a
/// stage (from disk or freshly generated); the text always goes through
/// the independent parser and checker.
fn run_stages<F>(
    family: RelationFamily,
    data_dir: &Path,
    mut script_text: F,
) -> Result<(RelationStmt, Vec<(String, String)>), ScriptError>
where
    F: FnMut(&StageSpec, &Catalog, &Registry) -> Result<String, ScriptError>,
{
    let (axiom_r, axiom_id, axiom) = relation_axiom(family);
    let mut prev_cat = load_catalog(SurfaceSig::new(1, axiom_r), data_dir)?;
    {
        // run the geometric gate on the base surface
        let mut reg = Registry::with_lanterns(&prev_cat);
        reg.register_axiom(&prev_cat, axiom_id, axiom.clone())?;
    }
    let mut prev_id = axiom_id.to_string();
    let mut prev_stmt = axiom;
    let mut texts = Vec::new();
    for stage in relation_stages(family) {
        let cat = if stage.r == prev_cat.surface().boundary {
            prev_cat.clone()
        } else {
            load_catalog(SurfaceSig::new(1, stage.r), data_dir)?
        };
        let mut reg = Registry::with_lanterns(&cat);
        if stage.r == axiom_r {
            reg.register_axiom(&cat, &prev_id, prev_stmt.clone())?;
        } else {
            reg.import_relation(&prev_id, &prev_stmt, &prev_cat, &cat, stage.import_map)?;
        }
        let text = script_text(stage, &cat, &reg)?;
        let script = parse_script(&text)?;
        let proved = match check_script(&script, &cat, &mut reg) {
            Verdict::Accepted(proved) => proved,
            Verdict::Rejected { line, reason } => {
                return Err(ScriptError::Rejected {
                    step: line,
                    msg: format!(
                        "{}: {reason}",
                        script_file_name(family, stage.r)
                    ),
                })
            }
        };
        let (_, s) = proved
            .iter()
            .find(|(id, _)| id == stage.proves)
            .ok_or_else(|| {
                reject(format!(
                    "stage r={} did not prove `{}`",
                    stage.r, stage.proves
                ))
            })?;
        texts.push((script_file_name(family, stage.r), text));
        prev_stmt = s.clone();
        prev_id = stage.proves.to_string();
        prev_cat = cat;
    }
    Ok((prev_stmt, texts))
}

/// Replays the shipped stage scripts from `data_dir/scripts` and returns
/// the relation proved on Σ_{1,8}.
pub fn verify_relation(
    family: RelationFamily,
    data_dir: &Path,
) -> Result<RelationStmt, ScriptError> {
    let (stmt, _) = run_stages(family, data_dir, |stage, _, _| {
        let path = data_dir
            .join("scripts")
            .join(script_file_name(family, stage.r));
        fs::read_to_string(&path)
            .map_err(|e| reject(format!("{}: {e}", path.display())))
    })?;
    Ok(stmt)
}

/// Regenerates all stage scripts of a family move by move, validating
/// every move and replaying the finished text, and returns the
/// `(file name, text)` pairs along with the final relation.
pub fn generate_relation_scripts(
    family: RelationFamily,
    data_dir: &Path,
) -> Result<(RelationStmt, Vec<(String, String)>), ScriptError> {
    run_stages(family, data_dir, |stage, cat, reg| {
        build_stage(family, stage.r, cat, reg)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::geometric_verify;

    fn data_dir() -> std::path::PathBuf {
        std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("../..")
            .join("data")
    }

    #[test]
    fn family_a_generates_and_verifies() {
        let (stmt, texts) = generate_relation_scripts(RelationFamily::A, &data_dir()).unwrap();
        assert_eq!(texts.len(), 4);
        assert_eq!(
            stmt.lhs,
            TwistWord::parse("a1 a2 d1 d2 d3 d4 d5 d6"),
        );
        let cat = load_catalog(SurfaceSig::new(1, 8), &data_dir()).unwrap();
        assert!(geometric_verify(&stmt, &cat).unwrap());
    }

    #[test]
    fn family_b_generates_and_verifies() {
        let (stmt, texts) = generate_relation_scripts(RelationFamily::B, &data_dir()).unwrap();
        assert_eq!(texts.len(), 4);
        assert_eq!(
            stmt.lhs,
            TwistWord::parse("B.a1 B.a2 B.a7 B.a8 B.d1 B.d2 B.d3 B.d4"),
        );
        let cat = load_catalog(SurfaceSig::new(1, 8), &data_dir()).unwrap();
        assert!(geometric_verify(&stmt, &cat).unwrap());
    }

    #[test]
    fn tampered_stage_script_is_rejected() {
        let dir = data_dir();
        let (_, texts) = generate_relation_scripts(RelationFamily::A, &dir).unwrap();
        let cat = load_catalog(SurfaceSig::new(1, 5), &dir).unwrap();
        let mut reg = Registry::with_lanterns(&cat);
        let (_, axiom_id, axiom) = relation_axiom(RelationFamily::A);
        reg.register_axiom(&cat, axiom_id, axiom).unwrap();
        // claim a stronger statement than the moves derive
        let bad = texts[0].1.replace("-gamma", "gamma");
        let script = parse_script(&bad).unwrap();
        assert!(!check_script(&script, &cat, &mut reg).is_accepted());
    }
}
