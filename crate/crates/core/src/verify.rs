//! End-to-end checks of the family identities against computed tables.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::betti::{
    betti_bigatti, betti_cyclic_quotient, betti_ek, betti_koszul, betti_koszul_auto, betti_quadratic_graph,
    BettiTable, FieldMode,
};
use crate::error::Error;
use crate::families::{expected_deltas, g_tilde, Family, FamilyInstance, Parts};
use crate::gin::{gin_with_retries, initial_ideal_after_change, GinOptions, DEFAULT_SEED};
use crate::ideal::{MonomialIdeal, Truncation};
use crate::lex::lex_ideal;
use crate::monomial::{Monomial, TermOrder};

/// Which engines take part in a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engines {
    /// Dual-prime Koszul tables plus the graph formula on quadratic ideals.
    Default,
    /// Additionally Eliahou–Kervaire, Bigatti and exact Koszul tables,
    /// required to agree.
    All,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub engines: Engines,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { engines: Engines::Default, seed: DEFAULT_SEED }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Covered by other claims and not checked on its own.
    Subsumed,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Subsumed => "subsumed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub family: Family,
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub seed: u64,
    pub gin_seed: u64,
    pub gin_attempt: u32,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> Value {
        let claims: Vec<Value> = self
            .claims
            .iter()
            .map(|c| {
                json!({
                    "claim_id": c.id,
                    "anchor": c.anchor,
                    "status": c.status.name(),
                    "lhs": c.lhs,
                    "rhs": c.rhs,
                })
            })
            .collect();
        let mut v = json!({
            "family": self.family.name(),
            "n": self.n,
            "i": self.i,
            "j": self.j,
            "seed": self.seed,
            "gin_seed": self.gin_seed,
            "gin_attempt": self.gin_attempt,
            "passed": self.passed(),
            "claims": claims,
        });
        if self.family == Family::Sydney {
            v["shifted_indices"] = json!({"i": self.i + 1, "j": self.j + 1});
        }
        v
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "{} n={} i={} j={} (seed {}, gin attempt {})\n",
            self.family, self.n, self.i, self.j, self.seed, self.gin_attempt
        );
        if self.family == Family::Sydney {
            out += &format!("  shifted indices: i+1={}, j+1={}\n", self.i + 1, self.j + 1);
        }
        for c in &self.claims {
            out += &format!("  [{}] {:<28} {}\n", c.status.name(), c.id, c.anchor);
            if c.status == Status::Fail {
                out += &format!("         lhs: {}\n         rhs: {}\n", c.lhs, c.rhs);
            }
        }
        let fails = self.failures().count();
        out += &format!(
            "  {}: {} claims, {} failed\n",
            if fails == 0 { "PASS" } else { "FAIL" },
            self.claims.len(),
            fails
        );
        out
    }
}

/// An engine error together with the claim that was being checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyError {
    pub claim: String,
    pub source: Error,
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "while checking {}: {}", self.claim, self.source)
    }
}

impl std::error::Error for VerifyError {}

type VResult<T> = std::result::Result<T, VerifyError>;

struct Ctx {
    n: usize,
    engines: Engines,
    tables: HashMap<MonomialIdeal, BettiTable>,
    claims: Vec<Claim>,
}

fn list<T: fmt::Display>(v: &[T]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(", "))
}

impl Ctx {
    fn new(n: usize, engines: Engines) -> Self {
        Ctx { n, engines, tables: HashMap::new(), claims: Vec::new() }
    }

    fn wrap<T>(claim: &str, r: crate::error::Result<T>) -> VResult<T> {
        r.map_err(|source| VerifyError { claim: claim.to_string(), source })
    }

    fn table(&mut self, claim: &str, ideal: &MonomialIdeal) -> VResult<BettiTable> {
        if let Some(t) = self.tables.get(ideal) {
            return Ok(t.clone());
        }
        let t = Self::wrap(claim, betti_koszul_auto(ideal))?;
        self.tables.insert(ideal.clone(), t.clone());
        Ok(t)
    }

    fn record(&mut self, id: impl Into<String>, anchor: &str, ok: bool, lhs: String, rhs: String) {
        self.claims.push(Claim {
            id: id.into(),
            anchor: anchor.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
        });
    }

    fn equal<T: PartialEq + fmt::Debug>(&mut self, id: &str, anchor: &str, lhs: T, rhs: T) {
        let ok = lhs == rhs;
        self.record(id, anchor, ok, format!("{lhs:?}"), format!("{rhs:?}"));
    }

    fn subsumed(&mut self, id: &str, anchor: &str, by: &str) {
        self.claims.push(Claim {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: Status::Subsumed,
            lhs: by.to_string(),
            rhs: String::new(),
        });
    }

    fn strand(&mut self, claim: &str, ideal: &MonomialIdeal, d: i64) -> VResult<Vec<i64>> {
        let t = self.table(claim, ideal)?;
        Ok((0..=self.n).map(|k| t.strand_entry(k, d) as i64).collect())
    }

    fn totals(&mut self, claim: &str, ideal: &MonomialIdeal) -> VResult<Vec<u64>> {
        let t = self.table(claim, ideal)?;
        Ok((0..=self.n).map(|k| t.total(k)).collect())
    }

    /// `strand(left) - strand(right) == expected` for `k = 0..=n`.
    fn delta(
        &mut self,
        id: &str,
        anchor: &str,
        left: &MonomialIdeal,
        right: &MonomialIdeal,
        d: i64,
        expected: &[i64],
    ) -> VResult<()> {
        let l = self.strand(id, left, d)?;
        let r = self.strand(id, right, d)?;
        let diff: Vec<i64> = l.iter().zip(&r).map(|(a, b)| a - b).collect();
        self.record(id, anchor, diff == expected, list(&diff), list(expected));
        Ok(())
    }

    /// Totals of `lo` vs `hi`: strictly smaller for `k < from`, equal for
    /// `k >= from` (`k = 0..=n`).
    fn pattern(&mut self, id: &str, anchor: &str, lo: &MonomialIdeal, hi: &MonomialIdeal, from: usize) -> VResult<()> {
        let a = self.totals(id, lo)?;
        let b = self.totals(id, hi)?;
        let ok = (0..=self.n).all(|k| if k < from { a[k] < b[k] } else { a[k] == b[k] });
        self.record(id, anchor, ok, list(&a), list(&b));
        Ok(())
    }

    fn upward_closed(&mut self, id: &str, anchor: &str, a: &MonomialIdeal, b: &MonomialIdeal) -> VResult<()> {
        let ta = self.totals(id, a)?;
        let tb = self.totals(id, b)?;
        let eq: Vec<bool> = ta.iter().zip(&tb).map(|(x, y)| x == y).collect();
        let ok = (0..eq.len()).all(|k| !eq[k] || eq[k..].iter().all(|&e| e));
        let idx: Vec<usize> = (0..eq.len()).filter(|&k| eq[k]).collect();
        self.record(id, anchor, ok, list(&idx), "upward closed".into());
        Ok(())
    }

    fn monotone(&mut self, id: &str, anchor: &str, chain: &[&MonomialIdeal]) -> VResult<()> {
        let mut ok = true;
        for w in chain.windows(2) {
            let a = self.table(id, w[0])?;
            let b = self.table(id, w[1])?;
            ok &= a.entrywise_le(&b);
        }
        self.record(id, anchor, ok, "entrywise".into(), "I <= Gin <= Lex".into());
        Ok(())
    }

    fn regularity(&mut self, id: &str, anchor: &str, ideal: &MonomialIdeal, expected: u32) -> VResult<()> {
        let t = self.table(id, ideal)?;
        let r = Self::wrap(id, t.regularity())?;
        self.equal(id, anchor, r, expected);
        Ok(())
    }

    /// Graph-formula strand of a quadratic ideal against `target`'s strand 2.
    fn graph_strand(&mut self, id: &str, anchor: &str, quadratic: &MonomialIdeal, target: &MonomialIdeal, shift: i64) -> VResult<()> {
        let mut g = Self::wrap(id, betti_quadratic_graph(quadratic))?;
        g.resize(self.n + 1, 0);
        let g: Vec<i64> = g.into_iter().take(self.n + 1).map(|v| v as i64).collect();
        let t = self.strand(id, target, 2 + shift)?;
        self.record(id, anchor, g == t, list(&g), list(&t));
        Ok(())
    }

    /// With all engines: closed formulas and exact Koszul agree with the
    /// cached dual-prime table.
    fn engine_agreement(&mut self, id: &str, ideals: &[(&str, &MonomialIdeal)]) -> VResult<()> {
        if self.engines != Engines::All {
            return Ok(());
        }
        for (name, ideal) in ideals {
            let claim = format!("{id}-{name}");
            let base = self.table(&claim, ideal)?;
            let exact = Self::wrap(&claim, betti_koszul(ideal, FieldMode::Exact))?;
            let mut ok = exact == base;
            let mut detail = "koszul exact = dual-prime".to_string();
            if ideal.is_strongly_stable() {
                ok &= Self::wrap(&claim, betti_ek(ideal))? == base;
                ok &= Self::wrap(&claim, betti_bigatti(ideal))? == base;
                detail += ", ek, bigatti";
            }
            self.record(claim, "engine cross-agreement", ok, detail, "identical tables".into());
        }
        Ok(())
    }
}

fn shear_matrix(n: usize, target: usize, adds: &[usize]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
    for &k in adds {
        m[k - 1][target - 1] += 1;
    }
    m
}

/// Runs every check for one family instance.
pub fn theorem_check(inst: &FamilyInstance, opts: &VerifyOptions) -> VResult<Report> {
    let mut ctx = Ctx::new(inst.n, opts.engines);
    let gin_opts = GinOptions { seed: opts.seed, ..GinOptions::default() };
    let gin = Ctx::wrap("gin-closed", gin_with_retries(&inst.ideal, &gin_opts))?;
    match inst.family {
        Family::Boston => check_boston(&mut ctx, inst, &gin.ideal, opts)?,
        Family::Sydney => check_sydney(&mut ctx, inst, &gin.ideal, opts)?,
    }
    Ok(Report {
        family: inst.family,
        n: inst.n,
        i: inst.i,
        j: inst.j,
        seed: opts.seed,
        gin_seed: gin.seed,
        gin_attempt: gin.attempt,
        claims: ctx.claims,
    })
}

fn check_boston(ctx: &mut Ctx, inst: &FamilyInstance, gin: &MonomialIdeal, opts: &VerifyOptions) -> VResult<()> {
    let (n, i, j) = (inst.n, inst.i, inst.j);
    let Parts::Boston { j: jj } = &inst.parts else { unreachable!() };
    let ideal = &inst.ideal;

    // Generic initial ideals and the lexsegment ideal.
    ctx.equal("gin-closed", "revlex Gin equals m^3 + J + (x_i^2)", gin, &inst.gin_closed);
    let phi = shear_matrix(n, n, &[i]);
    let init = Ctx::wrap("phi-initial", initial_ideal_after_change(ideal, &phi, TermOrder::RevLex, 4))?;
    ctx.equal("phi-initial", "revlex initial ideal after x_n -> x_i + x_n", &init, &inst.gin_closed);
    let lex = Ctx::wrap("lex-closed", lex_ideal(ideal, None))?;
    ctx.equal("lex-closed", "Lex equals m^3 + J + (x_{i-1} x_j)", &lex, &inst.lex_closed);
    let lex_opts = GinOptions { seed: opts.seed, ..GinOptions::with_order(TermOrder::Lex) };
    let gin_lex = Ctx::wrap("gin-lex", gin_with_retries(ideal, &lex_opts))?;
    ctx.equal("gin-lex", "lex-order Gin equals Lex", &gin_lex.ideal, &inst.lex_closed);
    ctx.equal(
        "lex-closed-segment",
        "m^3 + J + (x_{i-1} x_j) is a lexsegment ideal",
        inst.lex_closed.is_lexsegment(),
        true,
    );

    // Strand 2: reduction to quadratic ideals, graph formula and deltas.
    let with = |u: Monomial| jj.with(u).expect("same dimension");
    let quad = [
        ("I", ideal, with(Monomial::quadric(n, n, n))),
        ("Gin", &inst.gin_closed, with(Monomial::quadric(n, i, i))),
        ("Lex", &inst.lex_closed, with(Monomial::quadric(n, i - 1, j))),
    ];
    for (name, full, q) in &quad {
        let id = format!("strand2-graph-{name}");
        ctx.graph_strand(&id, "strand 2 equals graph formula of the quadratic part", q, full, 0)?;
    }
    ctx.graph_strand("strand2-graph-J", "graph formula for J", jj, jj, 0)?;
    for rec in expected_deltas(inst) {
        let left = match rec.left {
            "I" => ideal,
            "Gin" => &inst.gin_closed,
            _ => &inst.lex_closed,
        };
        let anchor = format!("strand 2: {} - J = {}", rec.left, rec.formula);
        ctx.delta(rec.id, &anchor, left, jj, 2, &rec.values)?;
    }

    // Totals.
    ctx.pattern("totals-gin", "beta_k(I) < beta_k(Gin) for k < i, equal for k >= i", ideal, &inst.gin_closed, i)?;
    ctx.pattern(
        "totals-lex",
        "beta_l(Gin) < beta_l(Lex) for l < j, equal for l >= j",
        &inst.gin_closed,
        &inst.lex_closed,
        j,
    )?;

    // Cancellation between strands 2 and 3.
    for (name, x) in [("gin", &inst.gin_closed), ("lex", &inst.lex_closed)] {
        let s2x = ctx.strand("cancellation", x, 2)?;
        let s2i = ctx.strand("cancellation", ideal, 2)?;
        let tx = ctx.table("cancellation", x)?;
        let ti = ctx.table("cancellation", ideal)?;
        let lhs: Vec<i64> = (0..=n).map(|k| s2x[k] - s2i[k]).collect();
        let rhs: Vec<i64> = (0..=n)
            .map(|k| {
                if k == 0 {
                    0
                } else {
                    tx.get(k - 1, k as u32 + 2) as i64 - ti.get(k - 1, k as u32 + 2) as i64
                }
            })
            .collect();
        let id = format!("cancellation-{name}");
        ctx.record(&id, "strand-2 excess equals strand-3 excess one step back", lhs == rhs, list(&lhs), list(&rhs));
    }
    for (name, x) in [("I", ideal), ("Gin", &inst.gin_closed), ("Lex", &inst.lex_closed)] {
        ctx.regularity(&format!("regularity-{name}"), "regularity 3", x, 3)?;
    }

    ctx.upward_closed("persistence-gin", "{k : beta_k(I) = beta_k(Gin)} is upward closed", ideal, &inst.gin_closed)?;
    ctx.upward_closed("persistence-lex", "{k : beta_k(I) = beta_k(Lex)} is upward closed", ideal, &inst.lex_closed)?;
    ctx.monotone("monotone", "beta(I) <= beta(Gin) <= beta(Lex)", &[ideal, &inst.gin_closed, &inst.lex_closed])?;
    ctx.engine_agreement("engines", &[("I", ideal), ("Gin", &inst.gin_closed), ("Lex", &inst.lex_closed), ("J", jj)])?;
    Ok(())
}

fn check_sydney(ctx: &mut Ctx, inst: &FamilyInstance, gin: &MonomialIdeal, opts: &VerifyOptions) -> VResult<()> {
    let (n, i, j) = (inst.n, inst.i, inst.j);
    let Parts::Sydney { h, g: _, i_tilde, j: jj, j_tilde } = &inst.parts else { unreachable!() };
    let ideal = &inst.ideal;
    let (gin_c, lex_c) = (&inst.gin_closed, &inst.lex_closed);
    let x1 = Monomial::var(n, 1);

    ctx.equal("gin-closed", "revlex Gin closed form", gin, gin_c);
    let lex = Ctx::wrap("lex-closed", lex_ideal(ideal, None))?;
    ctx.equal("lex-closed", "Lex closed form", &lex, lex_c);

    // Gin and Lex agree from degree 4 on; in degree 3 only m_{<=j} differs.
    let high_equal = (4..=5).all(|d| gin_c.graded_component(d) == lex_c.graded_component(d));
    ctx.equal("gin-lex-high-degrees", "Gin_d = Lex_d for d >= 4", high_equal, true);
    let mg: Vec<u64> = (1..=n).map(|k| gin_c.m_leq_count(k, 3)).collect();
    let ml: Vec<u64> = (1..=n).map(|k| lex_c.m_leq_count(k, 3)).collect();
    // Lex has the fewest monomials with small maximal index, so the gap at
    // k = j runs Lex < Gin.
    let ok = (1..=n).all(|k| if k == j { ml[k - 1] < mg[k - 1] } else { mg[k - 1] == ml[k - 1] });
    ctx.record("m-leq-degree-3", "m_{<=k}(Gin,3) and m_{<=k}(Lex,3) differ only at k = j", ok, list(&mg), list(&ml));

    // Strand 3.
    let h_plus = |u: Monomial| h.with(u).expect("same dimension");
    ctx.equal(
        "truncation-3-I",
        "I_{<=3} = x_1(H + (x_n^2))",
        ideal.truncate(3, Truncation::AtMost),
        h_plus(Monomial::quadric(n, n, n)).scale(&x1).unwrap(),
    );
    ctx.equal(
        "truncation-3-gin",
        "Gin_{<=3} = x_1(H + (x_j^2))",
        gin_c.truncate(3, Truncation::AtMost),
        h_plus(Monomial::quadric(n, j, j)).scale(&x1).unwrap(),
    );
    ctx.graph_strand(
        "strand3-graph-I",
        "beta_{k,k+3}(I) = graph strand of H + (x_n^2)",
        &h_plus(Monomial::quadric(n, n, n)),
        ideal,
        1,
    )?;
    ctx.graph_strand(
        "strand3-graph-gin",
        "beta_{k,k+3}(Gin) = graph strand of H + (x_j^2)",
        &h_plus(Monomial::quadric(n, j, j)),
        gin_c,
        1,
    )?;
    let deltas = expected_deltas(inst);
    for rec in &deltas {
        let left = match rec.left {
            "I" => ideal,
            "Gin" => gin_c,
            _ => jj,
        };
        let right = match rec.right {
            "x1H" => i_tilde,
            "J" => jj,
            _ => j_tilde,
        };
        let anchor = format!("strand {}: {} - {} = {}", rec.strand, rec.left, rec.right, rec.formula);
        ctx.delta(rec.id, &anchor, left, right, rec.strand as i64, &rec.values)?;
    }

    // Strand 4 through J and J~.
    ctx.equal("truncation-3-J", "J_{<=3} = Gin_{<=3}", jj.truncate(3, Truncation::AtMost), gin_c.truncate(3, Truncation::AtMost));
    ctx.equal(
        "truncation-3-Jt",
        "J~_{<=3} = I_{<=3}",
        j_tilde.truncate(3, Truncation::AtMost),
        ideal.truncate(3, Truncation::AtMost),
    );
    ctx.equal("J-strongly-stable", "J is strongly stable", jj.is_strongly_stable(), true);
    ctx.regularity("regularity-J", "regularity of J is 4", jj, 4)?;
    ctx.regularity("regularity-Jt", "regularity of J~ is 4", j_tilde, 4)?;
    let gin_opts = GinOptions { seed: opts.seed, ..GinOptions::default() };
    let gin_jt = Ctx::wrap("gin-Jt", gin_with_retries(j_tilde, &gin_opts))?;
    ctx.equal("gin-Jt", "Gin(J~) = J", &gin_jt.ideal, jj);
    {
        let tj = ctx.table("cancellation-J", jj)?;
        let tt = ctx.table("cancellation-J", j_tilde)?;
        let lhs: Vec<i64> = (0..=n).map(|k| tj.get(k, k as u32 + 4) as i64 - tt.get(k, k as u32 + 4) as i64).collect();
        let rhs: Vec<i64> =
            (0..=n).map(|k| tj.get(k + 1, k as u32 + 4) as i64 - tt.get(k + 1, k as u32 + 4) as i64).collect();
        ctx.record(
            "cancellation-J",
            "strand-4 excess of J over J~ equals strand-3 excess one step up",
            lhs == rhs,
            list(&lhs),
            list(&rhs),
        );
    }
    let w = Monomial::quadric(n, 2, 2).mul(&Monomial::quadric(n, n, n));
    ctx.equal(
        "truncation-4-I",
        "I_{<=4} = J~ + (x_2^2 x_n^2)",
        ideal.truncate(4, Truncation::AtMost),
        j_tilde.with(w.clone()).unwrap(),
    );
    let quotient = Ctx::wrap("cyclic-quotient", betti_cyclic_quotient(j_tilde, &w, FieldMode::DualPrime))?;
    let qs: Vec<i64> = (0..=n).map(|k| quotient.strand_entry(k, 4) as i64).collect();
    let want: Vec<i64> = (0..=n).map(|k| crate::binomial::binom(i as i64 - 1, k as i64)).collect();
    ctx.record("cyclic-quotient", "beta_{k,k+4}((J~ + (x_2^2 x_n^2))/J~) = C(i-1,k)", qs == want, list(&qs), list(&want));
    {
        let si = ctx.strand("sequence-split", ideal, 4)?;
        let st = ctx.strand("sequence-split", j_tilde, 4)?;
        let sum: Vec<i64> = st.iter().zip(&qs).map(|(a, b)| a + b).collect();
        ctx.record("sequence-split", "beta_{k,k+4}(I) = beta_{k,k+4}(J~) + beta_{k,k+4}(quotient)", si == sum, list(&si), list(&sum));
    }
    ctx.subsumed("quotient-iso", "quotient strand equals the G~ quotient strand", "cyclic-quotient, g-tilde-delta");
    ctx.subsumed("g-tilde-sequence", "G~ quotient strand is a difference of G~ strands", "cyclic-quotient, g-tilde-delta");
    for (id, strict) in [("g-tilde-delta", true), ("g-tilde-delta-squares", false)] {
        let gt = g_tilde(n, i, strict);
        let gtn = gt.with(Monomial::quadric(n, n, n)).unwrap();
        let anchor = if strict {
            "G~ from x_p x_q with p < q: strand-2 delta of adding x_n^2 is C(i-1,k)"
        } else {
            "G~ from x_p x_q with p <= q: strand-2 delta of adding x_n^2 is C(i-1,k)"
        };
        ctx.delta(id, anchor, &gtn, &gt, 2, &want)?;
    }

    // Fourth step and conclusions.
    ctx.regularity("regularity-I", "regularity of I is 5", ideal, 5)?;
    ctx.regularity("regularity-gin", "regularity of Gin is 5", gin_c, 5)?;
    for (d, from, id) in [(3i64, j, "equal-strand-3"), (4, i + 1, "equal-strand-4"), (5, i, "equal-strand-5")] {
        let a = ctx.strand(id, ideal, d)?;
        let b = ctx.strand(id, gin_c, d)?;
        let ok = (from..=n).all(|k| a[k] == b[k]);
        let anchor = format!("beta_(k,k+{d})(I) = beta_(k,k+{d})(Gin) for k >= {from}");
        ctx.record(id, &anchor, ok, list(&a), list(&b));
    }
    {
        let a = ctx.table("strand-4-gap", ideal)?.get(i, i as u32 + 4) as i64;
        let b = ctx.table("strand-4-gap", gin_c)?.get(i, i as u32 + 4) as i64;
        ctx.equal("strand-4-gap", "beta_{i,i+4}(Gin) - beta_{i,i+4}(I) = 1", b - a, 1);
    }
    let gin_anchor = format!("beta_k(I) < beta_k(Gin) for k <= i, equal from i+1 (shifted: first equality at {})", i + 1);
    ctx.pattern("totals-gin", &gin_anchor, ideal, gin_c, i + 1)?;
    let lex_anchor = format!("beta_l(Gin) < beta_l(Lex) for l <= j, equal from j+1 (shifted: first equality at {})", j + 1);
    ctx.pattern("totals-lex", &lex_anchor, gin_c, lex_c, j + 1)?;

    ctx.upward_closed("persistence-gin", "{k : beta_k(I) = beta_k(Gin)} is upward closed", ideal, gin_c)?;
    ctx.upward_closed("persistence-lex", "{k : beta_k(I) = beta_k(Lex)} is upward closed", ideal, lex_c)?;
    ctx.monotone("monotone", "beta(I) <= beta(Gin) <= beta(Lex)", &[ideal, gin_c, lex_c])?;
    ctx.engine_agreement(
        "engines",
        &[("I", ideal), ("Gin", gin_c), ("Lex", lex_c), ("J", jj), ("Jt", j_tilde)],
    )?;
    Ok(())
}

/// Verifies every case of a family up to `max_n`, in parallel; the result
/// is sorted by `(n, i, j)`.
pub fn sweep(family: Family, max_n: usize, opts: &VerifyOptions) -> Vec<(usize, usize, usize, VResult<Report>)> {
    let mut out: Vec<_> = family
        .cases(max_n)
        .into_par_iter()
        .map(|(n, i, j)| {
            let report = Ctx::wrap("instance", family.instance(n, i, j)).and_then(|inst| theorem_check(&inst, opts));
            (n, i, j, report)
        })
        .collect();
    out.sort_by_key(|r| (r.0, r.1, r.2));
    out
}
