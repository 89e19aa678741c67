//! Generic initial ideals.
//!
//! A trial draws an integer matrix with entries uniform in `[-B, B]`,
//! changes coordinates and takes the initial ideal of the image. Because
//! every input here is homogeneous, the degree-`d` part of the initial ideal
//! is the set of leading monomials of the degree-`d` component, i.e. the
//! column rank profile of its coefficient matrix with columns sorted by the
//! term order. A result is accepted only when two independent trials agree
//! and the ideal passes the strong-stability, Borel-fixedness and Hilbert
//! function checks.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::{betti_koszul, FieldMode};
use crate::binomial::monomial_count;
use crate::error::{Error, Result};
use crate::field::{Field, GinField, Rational};
use crate::groebner::buchberger;
use crate::ideal::MonomialIdeal;
use crate::lex::macaulay_upper;
use crate::linalg::{rank, rank_exact, Echelon, IntEchelon};
use crate::monomial::{monomials_of_degree, Monomial, TermOrder};
use crate::poly::{LinearChange, Polynomial};

/// Coefficient arithmetic used inside the trials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GinArithmetic {
    /// Exact rationals.
    Exact,
    /// Integers modulo a single large prime.
    Modular,
    /// Exact for fewer than six variables, modular otherwise.
    Auto,
}

/// How each trial computes the initial ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GinMethod {
    /// Degree-by-degree row reduction.
    Linear,
    /// Reduced Gröbner basis of the transformed generators.
    Buchberger,
}

#[derive(Clone, Debug)]
pub struct GinOptions {
    pub order: TermOrder,
    pub seed: u64,
    pub coefficient_bound: i64,
    pub arithmetic: GinArithmetic,
    pub method: GinMethod,
    /// Highest degree examined; derived from the input when `None`.
    pub degree_bound: Option<u32>,
    /// Attempts (pairs of trials) before giving up in [`gin_with_retries`].
    pub max_attempts: u32,
}

pub const DEFAULT_SEED: u64 = 0x6d75_7261_6968_6962;

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            order: TermOrder::RevLex,
            seed: DEFAULT_SEED,
            coefficient_bound: 100,
            arithmetic: GinArithmetic::Auto,
            method: GinMethod::Linear,
            degree_bound: None,
            max_attempts: 5,
        }
    }
}

impl GinOptions {
    pub fn with_order(order: TermOrder) -> Self {
        GinOptions { order, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinOutcome {
    pub ideal: MonomialIdeal,
    pub order: TermOrder,
    /// Seed of the accepted attempt.
    pub seed: u64,
    /// 1-based index of the accepted attempt.
    pub attempt: u32,
    /// Highest degree computed.
    pub degree_bound: u32,
    pub exact: bool,
}

const LEX_DEGREE_CAP: u32 = 64;

/// Generic initial ideal of a monomial ideal from one pair of trials.
pub fn gin(ideal: &MonomialIdeal, opts: &GinOptions) -> Result<GinOutcome> {
    gin_attempt(&Source::Monomial(ideal), ideal.n(), opts, opts.seed, 1)
}

/// [`gin`], retrying with fresh seeds on non-generic samples.
pub fn gin_with_retries(ideal: &MonomialIdeal, opts: &GinOptions) -> Result<GinOutcome> {
    retry(opts, |seed, attempt| gin_attempt(&Source::Monomial(ideal), ideal.n(), opts, seed, attempt))
}

/// Generic initial ideal of the ideal generated by homogeneous polynomials.
/// `opts.degree_bound` must be set.
pub fn gin_of_polynomials(gens: &[Polynomial<Rational>], n: usize, opts: &GinOptions) -> Result<GinOutcome> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    if opts.degree_bound.is_none() && opts.method == GinMethod::Linear {
        return Err(Error::ParameterRange("polynomial input needs an explicit degree bound".into()));
    }
    retry(opts, |seed, attempt| gin_attempt(&Source::Polynomials(gens), n, opts, seed, attempt))
}

fn retry(opts: &GinOptions, mut run: impl FnMut(u64, u32) -> Result<GinOutcome>) -> Result<GinOutcome> {
    let mut last = None;
    for attempt in 1..=opts.max_attempts.max(1) {
        let seed = opts.seed.wrapping_add(u64::from(attempt - 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        match run(seed, attempt) {
            Err(e @ Error::NongenericSample { .. }) => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one attempt"))
}

enum Source<'a> {
    Monomial(&'a MonomialIdeal),
    Polynomials(&'a [Polynomial<Rational>]),
}

impl Source<'_> {
    fn max_degree(&self) -> u32 {
        match self {
            Source::Monomial(i) => i.max_generator_degree().unwrap_or(0),
            Source::Polynomials(g) => g.iter().filter_map(Polynomial::degree).max().unwrap_or(0),
        }
    }
}

/// Random integer matrix, invertible over Q (and modulo the gin prime when
/// `modular`).
pub fn random_change(rng: &mut impl Rng, n: usize, bound: i64, modular: bool) -> Vec<Vec<i64>> {
    loop {
        let m: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect())
            .collect();
        let ints = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        if rank_exact(ints) != n {
            continue;
        }
        if modular {
            let rows = m.iter().map(|r| r.iter().map(|&v| GinField::from_i64(v)).collect()).collect();
            if rank(rows) != n {
                continue;
            }
        }
        return m;
    }
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn gin_attempt(source: &Source, n: usize, opts: &GinOptions, seed: u64, attempt: u32) -> Result<GinOutcome> {
    if let Source::Monomial(i) = source {
        if i.is_unit() {
            return Err(Error::UnsupportedIdeal("generic initial ideal of the unit ideal".into()));
        }
        if i.is_zero() {
            return Ok(GinOutcome {
                ideal: (*i).clone(),
                order: opts.order,
                seed,
                attempt,
                degree_bound: 0,
                exact: true,
            });
        }
    }
    let exact = match opts.arithmetic {
        GinArithmetic::Exact => true,
        GinArithmetic::Modular => false,
        GinArithmetic::Auto => n < 6,
    };
    let plan = DegreePlan::new(source, opts)?;
    let run = |stream: u64| -> Result<(MonomialIdeal, u32)> {
        let mut rng = trial_rng(seed, stream);
        let matrix = random_change(&mut rng, n, opts.coefficient_bound, !exact);
        if exact {
            trial::<Rational>(source, n, &matrix, opts, &plan)
        } else {
            trial::<GinField>(source, n, &matrix, opts, &plan)
        }
    };
    let (a, b) = rayon::join(|| run(0), || run(1));
    let (a, da) = a?;
    let (b, _) = b?;
    let nongeneric = |reason: String| Error::NongenericSample { seed, reason };
    if a != b {
        return Err(nongeneric(format!("trials disagree: {a} vs {b}")));
    }
    if !a.is_strongly_stable() {
        return Err(nongeneric(format!("result {a} is not strongly stable")));
    }
    if !is_borel_fixed(&a) {
        return Err(nongeneric(format!("result {a} is not Borel-fixed")));
    }
    if let Source::Monomial(i) = source {
        for d in 0..=da {
            if a.hilbert_value(d) != i.hilbert_value(d) {
                return Err(nongeneric(format!("Hilbert function differs in degree {d}")));
            }
        }
    }
    Ok(GinOutcome {
        ideal: a,
        order: opts.order,
        seed,
        attempt,
        degree_bound: da,
        exact,
    })
}

/// Which degrees a trial must examine.
enum DegreePlan {
    /// Every degree up to the bound.
    UpTo(u32),
    /// Grow until the Gotzmann persistence certificate holds.
    Certified { start: u32 },
}

impl DegreePlan {
    fn new(source: &Source, opts: &GinOptions) -> Result<Self> {
        if let Some(d) = opts.degree_bound {
            return Ok(DegreePlan::UpTo(d));
        }
        let Source::Monomial(ideal) = source else {
            return Ok(DegreePlan::UpTo(source.max_degree()));
        };
        match opts.order {
            // Generated in degrees at most reg(I); one extra degree is checked.
            TermOrder::RevLex => {
                let table = match betti_koszul(ideal, FieldMode::DualPrime) {
                    Ok(t) => t,
                    Err(Error::PrimeDisagreement { .. }) => betti_koszul(ideal, FieldMode::Exact)?,
                    Err(e) => return Err(e),
                };
                let reg = table.regularity()?;
                Ok(DegreePlan::UpTo(reg.max(source.max_degree()) + 1))
            }
            TermOrder::Lex => Ok(DegreePlan::Certified { start: source.max_degree() }),
        }
    }
}

trait Elimination: Field {
    fn column_profile(rows: Vec<Vec<Self>>, width: usize) -> Vec<usize>;
}

impl<const P: u64> Elimination for crate::field::Fp<P> {
    fn column_profile(rows: Vec<Vec<Self>>, width: usize) -> Vec<usize> {
        let mut e = Echelon::new(width);
        for r in rows {
            e.insert(r);
            if e.is_full() {
                break;
            }
        }
        e.pivots()
    }
}

impl Elimination for Rational {
    fn column_profile(rows: Vec<Vec<Self>>, width: usize) -> Vec<usize> {
        let mut e = IntEchelon::new(width);
        for r in rows {
            let den = r.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints = r.iter().map(|q| q.numer() * (&den / q.denom())).collect();
            e.insert(ints);
            if e.is_full() {
                break;
            }
        }
        e.pivots()
    }
}

struct Images<F> {
    change: LinearChange<F>,
    memo: HashMap<Monomial, Polynomial<F>>,
}

impl<F: Field> Images<F> {
    fn of(&mut self, u: &Monomial) -> Polynomial<F> {
        if let Some(p) = self.memo.get(u) {
            return p.clone();
        }
        let p = match u.support().next() {
            None => Polynomial::monomial(u.clone()),
            Some(k) => {
                let rest = u.over_var(k).expect("in support");
                self.of(&rest).mul(&self.change.image_of_var(k))
            }
        };
        self.memo.insert(u.clone(), p.clone());
        p
    }
}

fn trial<F: Elimination>(
    source: &Source,
    n: usize,
    matrix: &[Vec<i64>],
    opts: &GinOptions,
    plan: &DegreePlan,
) -> Result<(MonomialIdeal, u32)> {
    let change = LinearChange::<F>::from_integers(matrix)?;
    let gens: Vec<Polynomial<F>> = match source {
        Source::Monomial(i) => i.generators().iter().cloned().map(Polynomial::monomial).collect(),
        Source::Polynomials(g) => g
            .iter()
            .map(|p| p.map_coefficients(F::from_rational))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Other("coefficient denominator vanishes modulo the prime".into()))?,
    };

    if opts.method == GinMethod::Buchberger {
        let moved = gens.iter().map(|g| change.apply(g)).collect::<Result<Vec<_>>>()?;
        let basis = buchberger(&moved, opts.order)?;
        let ideal = MonomialIdeal::new(n, basis.iter().map(|g| g.leading_monomial(opts.order).unwrap().clone()))?;
        let top = ideal.max_generator_degree().unwrap_or(0);
        return Ok((ideal, top));
    }

    let mut images = Images { change, memo: HashMap::new() };
    let mut moved_gens: Option<Vec<Polynomial<F>>> = None;
    let mut found: Vec<Monomial> = Vec::new();
    let mut degree_part = |d: u32, images: &mut Images<F>| -> Result<Vec<Monomial>> {
        let cols = monomials_of_degree(n, d, opts.order);
        let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(k, u)| (u, k)).collect();
        let to_row = |p: &Polynomial<F>| -> Vec<F> {
            let mut row = vec![F::zero(); cols.len()];
            for (u, c) in p.terms() {
                row[index[u]] = c.clone();
            }
            row
        };
        let rows: Vec<Vec<F>> = match source {
            Source::Monomial(ideal) => {
                let comp = ideal.graded_component(d);
                if comp.len() as u64 == monomial_count(n, d) {
                    return Ok(cols.clone());
                }
                comp.iter().map(|u| to_row(&images.of(u))).collect()
            }
            Source::Polynomials(_) => {
                let moved = moved_gens.get_or_insert_with(|| {
                    gens.iter().map(|g| images.change.apply(g).expect("dimension checked")).collect()
                });
                let mut rows = Vec::new();
                for g in moved.iter() {
                    let gd = g.degree().unwrap_or(0);
                    if gd > d {
                        continue;
                    }
                    for shift in monomials_of_degree(n, d - gd, TermOrder::Lex) {
                        rows.push(to_row(&g.mul_term(&F::one(), &shift)));
                    }
                }
                rows
            }
        };
        let expected = match source {
            Source::Monomial(ideal) => Some(ideal.hilbert_value(d) as usize),
            Source::Polynomials(_) => None,
        };
        let pivots = F::column_profile(rows, cols.len());
        if let Some(e) = expected {
            if pivots.len() != e {
                return Err(Error::NongenericSample {
                    seed: opts.seed,
                    reason: format!("transformed component of degree {d} lost rank"),
                });
            }
        }
        Ok(pivots.into_iter().map(|k| cols[k].clone()).collect())
    };

    match *plan {
        DegreePlan::UpTo(top) => {
            for d in 0..=top {
                found.extend(degree_part(d, &mut images)?);
            }
            Ok((MonomialIdeal::new(n, found)?, top))
        }
        DegreePlan::Certified { start } => {
            let Source::Monomial(ideal) = source else {
                unreachable!("certified plans are built for monomial input only")
            };
            for d in 0..=start {
                found.extend(degree_part(d, &mut images)?);
            }
            let mut top = start;
            loop {
                let next = degree_part(top + 1, &mut images)?;
                let generated = MonomialIdeal::new(n, found.clone())?;
                let q_top = monomial_count(n, top) - ideal.hilbert_value(top);
                let q_next = monomial_count(n, top + 1) - ideal.hilbert_value(top + 1);
                let maximal_growth = macaulay_upper(u128::from(q_top), top) == Some(u128::from(q_next));
                if maximal_growth && generated.hilbert_value(top + 1) == next.len() as u64 {
                    return Ok((generated, top + 1));
                }
                found.extend(next);
                top += 1;
                if top > LEX_DEGREE_CAP {
                    return Err(Error::LexBoundExceeded(LEX_DEGREE_CAP));
                }
            }
        }
    }
}

/// Invariance under every elementary upper-triangular substitution
/// `x_p -> x_p + x_q` (`q < p`), checked by expanding the images of the
/// generators.
pub fn is_borel_fixed(ideal: &MonomialIdeal) -> bool {
    let n = ideal.n();
    for p in 2..=n {
        for q in 1..p {
            let Ok(change) = LinearChange::<Rational>::shear(n, p, &[(q, 1)]) else {
                return false;
            };
            for g in ideal.generators() {
                let image = change.apply_monomial(g);
                if image.terms().any(|(u, c)| !c.is_zero() && !ideal.contains_unchecked(u)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Initial ideal of `phi(I)` for a given integer change of coordinates.
pub fn initial_ideal_after_change(
    ideal: &MonomialIdeal,
    matrix: &[Vec<i64>],
    order: TermOrder,
    degree_bound: u32,
) -> Result<MonomialIdeal> {
    let opts = GinOptions {
        order,
        degree_bound: Some(degree_bound),
        ..GinOptions::default()
    };
    let plan = DegreePlan::UpTo(degree_bound);
    trial::<Rational>(&Source::Monomial(ideal), ideal.n(), matrix, &opts, &plan).map(|(i, _)| i)
}
