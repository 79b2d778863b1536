//! Named checkers for the identities relating group determinants, their
//! factors and commutators.
//!
//! Most checkers are a list of equations written once over any [`DetRing`].
//! Symbolic mode instantiates them with the variables `x_g` and demands
//! polynomial equality; randomized mode instantiates them at exact random
//! integer points. A few checkers (representation tables, normal forms, the
//! Fourier transform, witness searches) are not polynomial identities and
//! have their own drivers.

use std::fmt;
use std::str::FromStr;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::context::GroupContext;
use crate::cyclotomic::CycloNumber;
use crate::detlab::{
    circulant_theta, frobenius_theta, inverse_cofactor, inverse_element, numeric_det_at,
    rotation_product, theta, theta_e_product, DetRing, DEFAULT_SYMBOLIC_LIMIT,
};
use crate::error::{Error, Result};
use crate::group_algebra::{AlgebraElement, Factors};
use crate::groups::Family;
use crate::reps::{chi_prime, fourier_transform, rep_factor_det, Representation, SmallMatrix};
use crate::ring::{self, Ring};

macro_rules! check_ids {
    ($($variant:ident => $text:literal, $desc:literal;)*) => {
        /// Identifier of a checker.
        #[allow(non_camel_case_types)]
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId {
            $($variant,)*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $text,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $desc,)*
                }
            }
        }
    };
}

check_ids! {
    T2_1_1 => "T2.1.1", "Θ(G) = Π_φ det(Σ_g φ(g) x_g)^{deg φ} over the irreducible representations";
    T3_1_2 => "T3.1.2", "the Fourier transform f ↦ (Σ_g conj(φ(g)) f(g))_φ is multiplicative on the group algebra";
    T3_2_1 => "T3.2.1", "abelian G: Θ(G)e = Π_χ Σ_g χ(g) x_g g";
    C3_2_2 => "C3.2.2", "abelian G: (Σ_g x_g g)⁻¹ = Θ(G)⁻¹ Π_{χ≠χ₁} Σ_g χ(g) x_g g";
    L4_1_1 => "L4.1.1", "D_m: every element is a^k b^l uniquely, |D_m| = 2m";
    L4_2_1 => "L4.2.1", "Q_m: every element is a^k b^l uniquely, |Q_m| = 4m";
    REPS => "REPS", "every table entry is a homomorphism and Σ (deg φ)² = |G|";
    L5_1_1 => "L5.1.1", "A_h = 0 for h ∉ ⟨a⟩ and A_h = A_{h⁻¹}";
    L5_1_2 => "L5.1.2", "(Σ χ₁(g)x_g)(Σ χ₂(g)x_g) = Σ_{h∈⟨a⟩} A_h and (Σ χ₃(g)x_g)(Σ χ₄(g)x_g) = Σ_{h∈⟨a⟩} χ'_{r/2}(h) A_h";
    L5_1_3 => "L5.1.3", "det(Σ_g φ_l(g) x_g) = Σ_{h∈⟨a⟩} χ'_l(h) A_h";
    L5_1_4 => "L5.1.4", "Σ_{g∈⟨a⟩} χ'(g) A_g = Σ_{g∈⟨a⟩} conj(χ'(g)) A_g";
    T5_1_5 => "T5.1.5", "Θ(G) = Π_{χ'} Σ_{g∈⟨a⟩} χ'(g) A_g";
    L5_2_1 => "L5.2.1", "α₁α₂ = Σ_{h∈⟨a⟩} A_h h";
    L5_2_2 => "L5.2.2", "α₃α₄ = Σ_{h∈⟨a⟩} χ'_{r/2}(h) A_h h";
    T5_2_3 => "T5.2.3", "Θ(G)e = Π_{χ'} Σ_{g∈⟨a⟩} χ'(g) A_g g";
    T5_2_3_READING => "T5.2.3-READING", "Θ(G)e = Π_{χ'} Σ_{g∈⟨a⟩} χ'(g) A_g g holds while Π_{χ'} Σ_{g∈⟨a⟩} χ'(g) x_g g differs from Θ(G)e";
    C5_2_4 => "C5.2.4", "α₁⁻¹ = Θ(G)⁻¹ α₂ Π_{l≠0} β(χ'_l) (D_m, m odd), else Θ(G)⁻¹ α₂α₃α₄ Π_{l∉{0,r/2}} β(χ'_l)";
    T1_1_5 => "T1.1.5", "Θ(G)e = α₁α₂ Π_{l≠0} Σ_{g∈⟨a⟩} χ'_l(g) A_g g";
    L6_1_1 => "L6.1.1", "x_g ↦ χ₂(g)x_{g⁻¹} on ⟨a⟩, χ₂(g)x_g off ⟨a⟩ swaps α₁ ↔ α₂ and α₃ ↔ α₄";
    L6_1_2 => "L6.1.2", "x_g ↦ χ₃(g)x_g sends α₁ → α₃, α₂ → α₄ and α₃ + α₄ → α₁ + α₂";
    L6_2_1 => "L6.2.1", "h ∈ ⟨a⟩: Σ_{g∈⟨a⟩} x_{gb} x_{b⁻¹g⁻¹h} = Σ_{g∈⟨a⟩} x_{gb} x_{hgb⁻¹}";
    L6_2_2 => "L6.2.2", "h ∉ ⟨a⟩: Σ_{g∉⟨a⟩} x_g x_{g⁻¹h} = Σ_{g∈⟨a⟩} x_g x_{gh}";
    T6_2_3 => "T6.2.3", "[α₁, α₂] = 0";
    T6_2_4 => "T6.2.4", "[α₃, α₄] = 0";
    L6_2_5 => "L6.2.5", "[α₁, α₃] = Σ_h Σ_g (χ₃(g⁻¹h) − χ₃(g)) x_g x_{g⁻¹h} h";
    L6_2_6 => "L6.2.6", "h = a^k, k odd: Σ_{g∈⟨a⟩} χ₃(g) x_g x_{g⁻¹h} = 0";
    L6_2_7 => "L6.2.7", "coefficient of a^k in [α₁, α₃] is Σ_{g∉⟨a⟩} ((−1)^k χ₃(g⁻¹) − χ₃(g)) x_g x_{g⁻¹h}";
    L6_2_8 => "L6.2.8", "closed form of the coefficient of a^k b in [α₁, α₃]";
    L6_2_9 => "L6.2.9", "expansion of [α₁, α₄] as sums over ⟨a⟩ and its complement";
    L6_2_10 => "L6.2.10", "coefficient of a^k in [α₁, α₄] is Σ_{g∉⟨a⟩} ((−1)^{k+1} χ₃(g⁻¹) + χ₃(g)) x_g x_{g⁻¹h}";
    L6_2_11 => "L6.2.11", "closed form of the coefficient of a^k b in [α₁, α₄]";
    T6_2_13 => "T6.2.13", "[α₁, α₃+α₄] = [α₂, α₃+α₄] = [α₃, α₁+α₂] = [α₄, α₁+α₂] = 0";
    NONVANISH => "NONVANISH", "[α₁, α₃], [α₁, α₄] and [α₂, α₄] are nonzero";
    PAIRING => "PAIRING", "α₁, α₂ commute, α₃, α₄ commute, and each pair commutes with the other pair's sum";
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim();
        CheckId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(wanted))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Requirement {
    Any,
    Abelian,
    Metacyclic,
    Dihedral,
    Quaternion,
    /// `D_m` with `m` even or any `Q_m`.
    FourLinear,
}

impl CheckId {
    fn requirement(self) -> Requirement {
        use CheckId::*;
        match self {
            T2_1_1 | T3_1_2 | REPS => Requirement::Any,
            T3_2_1 | C3_2_2 => Requirement::Abelian,
            L4_1_1 => Requirement::Dihedral,
            L4_2_1 => Requirement::Quaternion,
            L5_1_1 | L5_1_2 | L5_1_3 | L5_1_4 | T5_1_5 | L5_2_1 | T5_2_3 | T5_2_3_READING
            | C5_2_4 | T1_1_5 | L6_1_1 | L6_2_1 | L6_2_2 | T6_2_3 | PAIRING => {
                Requirement::Metacyclic
            }
            L5_2_2 | L6_1_2 | T6_2_4 | L6_2_5 | L6_2_6 | L6_2_7 | L6_2_8 | L6_2_9 | L6_2_10
            | L6_2_11 | T6_2_13 | NONVANISH => Requirement::FourLinear,
        }
    }

    /// Whether the check expands `Θ(G)` or a product of comparable size.
    fn heavy(self) -> bool {
        use CheckId::*;
        matches!(
            self,
            T2_1_1 | T3_2_1 | C3_2_2 | T5_1_5 | T5_2_3 | T5_2_3_READING | C5_2_4 | T1_1_5
        )
    }

    /// Whether randomized points must avoid `Θ(G) = 0`.
    fn needs_nonsingular(self) -> bool {
        matches!(self, CheckId::C3_2_2 | CheckId::C5_2_4)
    }
}

/// Whether a checker runs on a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "reason")]
pub enum Applicability {
    Applicable,
    /// Same family, but the objects involved do not exist for this group.
    Skip(String),
    /// Wrong family.
    Inapplicable(String),
}

pub fn applicability(id: CheckId, ctx: &GroupContext) -> Applicability {
    let family = ctx.group.family();
    let wrong = |what: &str| Applicability::Inapplicable(format!("requires {what}"));
    match id.requirement() {
        Requirement::Any => Applicability::Applicable,
        Requirement::Abelian if family != Family::Abelian => wrong("an abelian group"),
        Requirement::Dihedral if family != Family::Dihedral => wrong("a dihedral group"),
        Requirement::Quaternion if family != Family::Quaternion => {
            wrong("a generalized quaternion group")
        }
        Requirement::Metacyclic | Requirement::FourLinear if family == Family::Abelian => {
            wrong("a dihedral or generalized quaternion group")
        }
        Requirement::FourLinear if !ctx.reps.has_four_linear() => {
            Applicability::Skip("α₃ undefined: m odd".to_string())
        }
        _ => Applicability::Applicable,
    }
}

/// Every checker with its applicability to the group.
pub fn list_checks(ctx: &GroupContext) -> Vec<(CheckId, Applicability)> {
    CheckId::ALL
        .iter()
        .map(|&id| (id, applicability(id, ctx)))
        .collect()
}

/// How identities are tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    /// Symbolic up to the size limit, randomized above it.
    #[default]
    Auto,
    Symbolic,
    Randomized,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(Mode::Auto),
            "symbolic" => Ok(Mode::Symbolic),
            "randomized" | "numeric" => Ok(Mode::Randomized),
            other => Err(Error::InvalidParameter(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub mode: Mode,
    pub trials: usize,
    pub seed: u64,
    pub symbolic_limit: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: Mode::Auto,
            trials: 20,
            seed: 0,
            symbolic_limit: DEFAULT_SYMBOLIC_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one checker on one group.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: CheckId,
    pub group: String,
    /// `symbolic`, `randomized` or `exhaustive`.
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    fn new(id: CheckId, ctx: &GroupContext, mode: &str) -> Self {
        CheckResult {
            id,
            group: ctx.group.spec().to_string(),
            mode: mode.to_string(),
            trials: None,
            seed: None,
            status: Status::Pass,
            reason: None,
            witness: None,
            note: None,
        }
    }

    fn skipped(id: CheckId, ctx: &GroupContext, reason: String) -> Self {
        CheckResult {
            status: Status::Skipped,
            reason: Some(reason),
            ..Self::new(id, ctx, "none")
        }
    }

    fn randomized(id: CheckId, ctx: &GroupContext, cfg: &RunConfig) -> Self {
        CheckResult {
            trials: Some(cfg.trials),
            seed: Some(cfg.seed),
            ..Self::new(id, ctx, "randomized")
        }
    }

    fn fail(mut self, witness: Value) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Integers drawn uniformly from `[−bound, bound]`, reproducible from `seed`.
pub fn random_values(n: usize, seed: u64, bound: i64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw(&mut rng, n, bound)
}

fn draw(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<i64> {
    assert!(bound >= 1, "bound must be positive");
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// A reproducible random point `x_g ∈ [−bound, bound]`, indexed like the elements.
pub fn random_assignment(ctx: &GroupContext, seed: u64, bound: i64) -> Vec<CycloNumber> {
    ctx.point(&random_values(ctx.order(), seed, bound))
}

/// The sampling bound `10·|G|`.
pub fn default_bound(ctx: &GroupContext) -> i64 {
    10 * ctx.order() as i64
}

/// Runs one checker. Errors if the checker belongs to another family.
pub fn run_check(id: CheckId, ctx: &GroupContext, cfg: &RunConfig) -> Result<CheckResult> {
    match applicability(id, ctx) {
        Applicability::Inapplicable(reason) => {
            return Err(Error::Inapplicable {
                id: id.to_string(),
                group: ctx.group.spec().to_string(),
                reason,
            })
        }
        Applicability::Skip(reason) => return Ok(CheckResult::skipped(id, ctx, reason)),
        Applicability::Applicable => {}
    }
    let mut result = match id {
        CheckId::T3_1_2 => fourier_check(ctx, cfg)?,
        CheckId::L4_1_1 | CheckId::L4_2_1 => normal_form_check(id, ctx),
        CheckId::REPS => table_check(ctx),
        CheckId::NONVANISH => nonvanish_check(ctx, cfg)?,
        CheckId::T5_2_3_READING => reading_check(ctx, cfg)?,
        _ => equation_check(id, ctx, cfg)?,
    };
    if result.passed() || result.note.is_none() {
        result.note = result.note.or_else(|| note(id, ctx));
    }
    Ok(result)
}

/// Runs every checker of the group's family, in catalogue order.
pub fn run_all(ctx: &GroupContext, cfg: &RunConfig) -> Vec<CheckResult> {
    let ids: Vec<CheckId> = list_checks(ctx)
        .into_iter()
        .filter(|(_, a)| !matches!(a, Applicability::Inapplicable(_)))
        .map(|(id, _)| id)
        .collect();
    ids.par_iter()
        .map(|&id| run_check(id, ctx, cfg).expect("applicability filtered"))
        .collect()
}

fn note(id: CheckId, ctx: &GroupContext) -> Option<String> {
    let text = match id {
        CheckId::T1_1_5 => {
            "A_h = Σ_{g∈⟨a⟩}(x_g x_{hg} − x_{gb} x_{hgb⁻¹}); the one-term form Σ_{g∈⟨a⟩} χ₂(g) x_g x_{hg} does not factor Θ(G)"
        }
        CheckId::T5_2_3 => "factors carry the quadratic forms A_g as coefficients",
        CheckId::C5_2_4 if ctx.reps.has_four_linear() => {
            "β(χ'_{r/2}) is omitted because α₃α₄ = β(χ'_{r/2})"
        }
        CheckId::L5_1_3 if ctx.group.family() == Family::Quaternion => {
            "φ_l(b) has lower-left entry (−1)^l so that φ_l(b)² = φ_l(a^m)"
        }
        CheckId::L6_1_2 | CheckId::L6_2_8 | CheckId::L6_2_11 => {
            if imaginary_branch(ctx) {
                "branch χ₃(b) = ±i"
            } else {
                "branch χ₃(b) = ±1"
            }
        }
        _ => return None,
    };
    Some(text.to_string())
}

// ---------------------------------------------------------------------------
// equation checkers

enum Side<R> {
    Scalar(R),
    Element(AlgebraElement<R>),
}

struct Equation<R> {
    label: String,
    lhs: Side<R>,
    rhs: Side<R>,
}

impl<R: Ring> Equation<R> {
    fn scalar(label: impl Into<String>, lhs: R, rhs: R) -> Self {
        Equation {
            label: label.into(),
            lhs: Side::Scalar(lhs),
            rhs: Side::Scalar(rhs),
        }
    }

    fn element(label: impl Into<String>, lhs: AlgebraElement<R>, rhs: AlgebraElement<R>) -> Self {
        Equation {
            label: label.into(),
            lhs: Side::Element(lhs),
            rhs: Side::Element(rhs),
        }
    }

    fn zero(label: impl Into<String>, lhs: AlgebraElement<R>) -> Self {
        let zero = AlgebraElement::zero(lhs.group(), lhs.field());
        Self::element(label, lhs, zero)
    }

    /// First position where the sides differ: `(element index, lhs, rhs)`.
    fn mismatch(&self) -> Option<(Option<usize>, R, R)> {
        match (&self.lhs, &self.rhs) {
            (Side::Scalar(l), Side::Scalar(r)) => (l != r).then(|| (None, l.clone(), r.clone())),
            (Side::Element(l), Side::Element(r)) => l
                .coeffs()
                .iter()
                .zip(r.coeffs())
                .position(|(a, b)| a != b)
                .map(|g| (Some(g), l.coeff(g).clone(), r.coeff(g).clone())),
            _ => unreachable!("equation sides of different kinds"),
        }
    }
}

fn equation_check(id: CheckId, ctx: &GroupContext, cfg: &RunConfig) -> Result<CheckResult> {
    let symbolic = match cfg.mode {
        Mode::Symbolic => true,
        Mode::Randomized => false,
        Mode::Auto => !id.heavy() || ctx.order() <= cfg.symbolic_limit,
    };
    if symbolic {
        if id.heavy() && ctx.order() > cfg.symbolic_limit {
            return Ok(CheckResult::skipped(
                id,
                ctx,
                format!(
                    "order {} exceeds symbolic limit {}",
                    ctx.order(),
                    cfg.symbolic_limit
                ),
            ));
        }
        symbolic_equations(id, ctx)
    } else {
        randomized_equations(id, ctx, cfg)
    }
}

fn symbolic_equations(id: CheckId, ctx: &GroupContext) -> Result<CheckResult> {
    let xs = ctx.symbols();
    let result = CheckResult::new(id, ctx, "symbolic");
    for eq in equations(id, ctx, &xs)? {
        if let Some((g, l, r)) = eq.mismatch() {
            let mut w = Map::new();
            w.insert("equation".into(), json!(eq.label));
            if let Some(g) = g {
                w.insert("element".into(), json!(ctx.group.name(g)));
            }
            w.insert("lhs".into(), json!(clip(l.to_text(&ctx.vars))));
            w.insert("rhs".into(), json!(clip(r.to_text(&ctx.vars))));
            w.insert(
                "difference".into(),
                json!(clip((&l - &r).to_text(&ctx.vars))),
            );
            return Ok(result.fail(Value::Object(w)));
        }
    }
    Ok(result)
}

fn clip(mut text: String) -> String {
    const MAX: usize = 2000;
    if text.len() > MAX {
        let cut = (0..=MAX).rev().find(|&i| text.is_char_boundary(i)).unwrap();
        text.truncate(cut);
        text.push_str(" ...");
    }
    text
}

/// A reproducible stream of random points for trial `t`.
struct PointStream {
    rng: ChaCha8Rng,
    n: usize,
    bound: i64,
}

impl PointStream {
    fn new(ctx: &GroupContext, seed: u64, trial: usize) -> Self {
        PointStream {
            rng: ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64)),
            n: ctx.order(),
            bound: default_bound(ctx),
        }
    }

    fn next(&mut self) -> Vec<i64> {
        draw(&mut self.rng, self.n, self.bound)
    }
}

/// Attempts per trial at finding a point with `Θ(G) ≠ 0`.
const MAX_RESAMPLES: usize = 64;

fn assignment_json(ctx: &GroupContext, values: &[i64]) -> Value {
    let mut m = Map::new();
    for (g, v) in values.iter().enumerate() {
        m.insert(ctx.group.name(g).to_string(), json!(v));
    }
    Value::Object(m)
}

fn randomized_equations(id: CheckId, ctx: &GroupContext, cfg: &RunConfig) -> Result<CheckResult> {
    let result = CheckResult::randomized(id, ctx, cfg);
    for t in 0..cfg.trials {
        let mut stream = PointStream::new(ctx, cfg.seed, t);
        let mut values = stream.next();
        if id.needs_nonsingular() {
            let mut tries = 1;
            while numeric_det_at(ctx, &ctx.point(&values)).is_zero() {
                if tries == MAX_RESAMPLES {
                    return Ok(result.fail(json!({
                        "trial": t,
                        "error": "no nonsingular point found",
                    })));
                }
                values = stream.next();
                tries += 1;
            }
        }
        let point = ctx.point(&values);
        let mut eqs = equations(id, ctx, &point)?;
        eqs.extend(numeric_equations(id, ctx, &point)?);
        for eq in eqs {
            if let Some((g, l, r)) = eq.mismatch() {
                let mut w = Map::new();
                w.insert("equation".into(), json!(eq.label));
                w.insert("trial".into(), json!(t));
                w.insert("assignment".into(), assignment_json(ctx, &values));
                if let Some(g) = g {
                    w.insert("element".into(), json!(ctx.group.name(g)));
                }
                w.insert("lhs".into(), json!(l.to_string()));
                w.insert("rhs".into(), json!(r.to_string()));
                return Ok(result.fail(Value::Object(w)));
            }
        }
    }
    Ok(result)
}

/// Equations that only make sense at a numeric point.
fn numeric_equations(
    id: CheckId,
    ctx: &GroupContext,
    point: &[CycloNumber],
) -> Result<Vec<Equation<CycloNumber>>> {
    if !matches!(id, CheckId::C3_2_2 | CheckId::C5_2_4) {
        return Ok(Vec::new());
    }
    let inv = inverse_element(ctx, point)?;
    let alpha = Factors::new(ctx, point).generic();
    let e = AlgebraElement::basis(&ctx.group, &ctx.field, 0);
    Ok(vec![
        Equation::element("α₁⁻¹ α₁ = e", inv.convolve(&alpha)?, e.clone()),
        Equation::element("α₁ α₁⁻¹ = e", alpha.convolve(&inv)?, e),
    ])
}

/// `χ₃(b) = ±i`: the table variant of `Q_m` with `m` odd.
fn imaginary_branch(ctx: &GroupContext) -> bool {
    match ctx.reps.chi(3) {
        Ok(chi) => chi.value(ctx.group.a_pow_b(0)).as_rational().is_none(),
        Err(_) => false,
    }
}

/// The equations of an identity checker, instantiated at `xs`.
fn equations<R: DetRing>(id: CheckId, ctx: &GroupContext, xs: &[R]) -> Result<Vec<Equation<R>>> {
    let g = &ctx.group;
    let field = &ctx.field;
    let n = ctx.order();
    let f = Factors::new(ctx, xs);
    let theta_e = |t: R| AlgebraElement::scalar(g, t);
    let x = |v: usize| &xs[v];
    // Σ_{g ∈ S} w(g) x_g x_{other(g)}
    let quad = |set: &dyn Fn(usize) -> bool,
                w: &dyn Fn(usize) -> CycloNumber,
                other: &dyn Fn(usize) -> usize| {
        ring::sum(
            field,
            (0..n)
                .filter(|&h| set(h))
                .map(|h| x(h).mul(x(other(h))).scale(&w(h))),
        )
    };
    let rot = |h: usize| g.in_rotation(h);
    let off = |h: usize| !g.in_rotation(h);
    let all = |_: usize| true;

    let mut eqs = Vec::new();
    match id {
        CheckId::T2_1_1 => eqs.push(Equation::scalar(
            "Θ(G) = Π_φ det(Σ φ(g) x_g)^{deg φ}",
            theta(ctx, xs),
            frobenius_theta(ctx, xs),
        )),
        CheckId::T3_2_1 => {
            let prod = theta_e_product(ctx, xs)?;
            let t = theta(ctx, xs);
            eqs.push(Equation::scalar(
                "F(Π_χ α_χ) = Θ(G)",
                prod.augment(),
                t.clone(),
            ));
            eqs.push(Equation::element("Θ(G)e = Π_χ α_χ", theta_e(t), prod));
        }
        CheckId::C3_2_2 | CheckId::C5_2_4 => {
            let cof = inverse_cofactor(ctx, xs)?;
            let alpha = f.generic();
            let t = theta(ctx, xs);
            eqs.push(Equation::element(
                "α₁ · cofactor = Θ(G)e",
                alpha.convolve(&cof)?,
                theta_e(t.clone()),
            ));
            eqs.push(Equation::element(
                "cofactor · α₁ = Θ(G)e",
                cof.convolve(&alpha)?,
                theta_e(t),
            ));
        }
        CheckId::L5_1_1 => {
            let a = f.a_polys()?;
            for h in 0..n {
                if off(h) {
                    eqs.push(Equation::scalar(
                        format!("A_{{{}}} = 0", g.name(h)),
                        a[h].clone(),
                        R::zero_in(field),
                    ));
                }
                eqs.push(Equation::scalar(
                    format!("A_{{{0}}} = A_{{({0})⁻¹}}", g.name(h)),
                    a[h].clone(),
                    a[g.inv_idx(h)].clone(),
                ));
            }
        }
        CheckId::L5_1_2 => {
            let a = f.a_polys()?;
            let r = g.require_rotation()?;
            let lin = |i: usize| -> Result<R> {
                let chi = ctx.reps.chi(i)?;
                Ok(ring::sum(field, (0..n).map(|h| x(h).scale(chi.value(h)))))
            };
            let weighted = |l: usize| -> Result<R> {
                let chi = chi_prime(g, field, l)?;
                Ok(ring::sum(
                    field,
                    (0..r).map(|k| a[g.a_pow(k as i64)].scale(chi.at_power(k as i64))),
                ))
            };
            eqs.push(Equation::scalar(
                "(Σ χ₁(g)x_g)(Σ χ₂(g)x_g) = Σ_{h∈⟨a⟩} A_h",
                lin(1)?.mul(&lin(2)?),
                weighted(0)?,
            ));
            if ctx.reps.has_four_linear() {
                eqs.push(Equation::scalar(
                    "(Σ χ₃(g)x_g)(Σ χ₄(g)x_g) = Σ_{h∈⟨a⟩} χ'_{r/2}(h) A_h",
                    lin(3)?.mul(&lin(4)?),
                    weighted(r / 2)?,
                ));
            }
        }
        CheckId::L5_1_3 => {
            let a = f.a_polys()?;
            let r = g.require_rotation()?;
            for rep in ctx.reps.reps() {
                let Representation::Planar(p) = rep else {
                    continue;
                };
                let chi = chi_prime(g, field, p.index())?;
                let rhs = ring::sum(
                    field,
                    (0..r).map(|k| a[g.a_pow(k as i64)].scale(chi.at_power(k as i64))),
                );
                eqs.push(Equation::scalar(
                    format!("det(Σ φ_{}(g) x_g) = Σ χ'_{}(h) A_h", p.index(), p.index()),
                    rep_factor_det(rep, xs)?,
                    rhs,
                ));
            }
        }
        CheckId::L5_1_4 => {
            let a = f.a_polys()?;
            let r = g.require_rotation()?;
            for l in 0..r {
                let chi = chi_prime(g, field, l)?;
                let at = |c: &dyn Fn(&CycloNumber) -> CycloNumber| {
                    ring::sum(
                        field,
                        (0..r).map(|k| a[g.a_pow(k as i64)].scale(&c(chi.at_power(k as i64)))),
                    )
                };
                eqs.push(Equation::scalar(
                    format!("Σ χ'_{l}(g) A_g = Σ conj(χ'_{l}(g)) A_g"),
                    at(&|c| c.clone()),
                    at(&|c| c.conjugate()),
                ));
            }
        }
        CheckId::T5_1_5 => eqs.push(Equation::scalar(
            "Θ(G) = Π_{χ'} Σ χ'(g) A_g",
            theta(ctx, xs),
            circulant_theta(ctx, xs)?,
        )),
        CheckId::L5_2_1 => eqs.push(Equation::element(
            "α₁α₂ = Σ_{h∈⟨a⟩} A_h h",
            f.alpha(1)?.convolve(&f.alpha(2)?)?,
            f.beta(0)?,
        )),
        CheckId::L5_2_2 => {
            let r = g.require_rotation()?;
            eqs.push(Equation::element(
                "α₃α₄ = Σ_{h∈⟨a⟩} χ'_{r/2}(h) A_h h",
                f.alpha(3)?.convolve(&f.alpha(4)?)?,
                f.beta(r / 2)?,
            ));
        }
        CheckId::T5_2_3 => {
            let prod = theta_e_product(ctx, xs)?;
            let t = theta(ctx, xs);
            eqs.push(Equation::element("Θ(G)e = Π_{χ'} β(χ')", theta_e(t), prod));
        }
        CheckId::T1_1_5 => {
            let r = g.require_rotation()?;
            let a = f.a_polys()?;
            let mut prod = f.alpha(1)?.convolve(&f.alpha(2)?)?;
            for l in 1..r {
                prod = prod.convolve(&f.beta_from(l, &a)?)?;
            }
            eqs.push(Equation::element(
                "Θ(G)e = α₁α₂ Π_{l≠0} β(χ'_l)",
                theta_e(theta(ctx, xs)),
                prod,
            ));
        }
        CheckId::L6_1_1 => {
            let chi2 = ctx.reps.chi(2)?;
            let sigma = |v: &[R]| -> Vec<R> {
                (0..n)
                    .map(|h| {
                        let src = if rot(h) { g.inv_idx(h) } else { h };
                        v[src].scale(chi2.value(h))
                    })
                    .collect()
            };
            let ys = sigma(xs);
            let fy = Factors::new(ctx, &ys);
            eqs.push(Equation::element("σ(α₁) = α₂", fy.alpha(1)?, f.alpha(2)?));
            eqs.push(Equation::element("σ(α₂) = α₁", fy.alpha(2)?, f.alpha(1)?));
            if ctx.reps.has_four_linear() {
                eqs.push(Equation::element("σ(α₃) = α₄", fy.alpha(3)?, f.alpha(4)?));
                eqs.push(Equation::element("σ(α₄) = α₃", fy.alpha(4)?, f.alpha(3)?));
            }
            let back = sigma(&ys);
            for h in 0..n {
                eqs.push(Equation::scalar(
                    format!("σ(σ(x_{{{}}})) = x_{{{}}}", g.name(h), g.name(h)),
                    back[h].clone(),
                    xs[h].clone(),
                ));
            }
        }
        CheckId::L6_1_2 => {
            let chi3 = ctx.reps.chi(3)?;
            let ys: Vec<R> = (0..n).map(|h| xs[h].scale(chi3.value(h))).collect();
            let fy = Factors::new(ctx, &ys);
            let one = field.one();
            let minus = -&one;
            let plain = AlgebraElement::from_coeffs(
                g,
                (0..n)
                    .map(|h| x(h).scale(if rot(h) { &one } else { &minus }))
                    .collect(),
            )?;
            let inverted = AlgebraElement::from_coeffs(
                g,
                (0..n)
                    .map(|h| {
                        if rot(h) {
                            x(g.inv_idx(h)).clone()
                        } else {
                            x(h).clone()
                        }
                    })
                    .collect(),
            )?;
            eqs.push(Equation::element("τ(α₁) = α₃", fy.alpha(1)?, f.alpha(3)?));
            eqs.push(Equation::element("τ(α₂) = α₄", fy.alpha(2)?, f.alpha(4)?));
            if imaginary_branch(ctx) {
                eqs.push(Equation::element(
                    "τ(α₃) = Σ_{⟨a⟩} x_g g − Σ_{G∖⟨a⟩} x_g g",
                    fy.alpha(3)?,
                    plain,
                ));
                eqs.push(Equation::element(
                    "τ(α₄) = Σ_{⟨a⟩} x_{g⁻¹} g + Σ_{G∖⟨a⟩} x_g g",
                    fy.alpha(4)?,
                    inverted,
                ));
            } else {
                eqs.push(Equation::element("τ(α₃) = α₁", fy.alpha(3)?, f.alpha(1)?));
                eqs.push(Equation::element("τ(α₄) = α₂", fy.alpha(4)?, f.alpha(2)?));
            }
            eqs.push(Equation::element(
                "τ(α₃ + α₄) = α₁ + α₂",
                fy.alpha(3)?.add(&fy.alpha(4)?)?,
                f.alpha(1)?.add(&f.alpha(2)?)?,
            ));
        }
        CheckId::L6_2_1 => {
            let b_inv = g.inv_idx(g.a_pow_b(0));
            for h in (0..n).filter(|&h| rot(h)) {
                eqs.push(Equation::scalar(
                    format!(
                        "h = {}: Σ x_{{gb}} x_{{b⁻¹g⁻¹h}} = Σ x_{{gb}} x_{{hgb⁻¹}}",
                        g.name(h)
                    ),
                    coset_sum(ctx, xs, |k| g.mul_idx(g.mul_idx(b_inv, g.inv_idx(k)), h)),
                    coset_sum(ctx, xs, |k| g.mul_idx(g.mul_idx(h, k), b_inv)),
                ));
            }
        }
        CheckId::L6_2_2 => {
            for h in (0..n).filter(|&h| off(h)) {
                let one = |_: usize| field.one();
                eqs.push(Equation::scalar(
                    format!(
                        "h = {}: Σ_{{g∉⟨a⟩}} x_g x_{{g⁻¹h}} = Σ_{{g∈⟨a⟩}} x_g x_{{gh}}",
                        g.name(h)
                    ),
                    quad(&off, &one, &|k| g.mul_idx(g.inv_idx(k), h)),
                    quad(&rot, &one, &|k| g.mul_idx(k, h)),
                ));
            }
        }
        CheckId::T6_2_3 => eqs.push(Equation::zero(
            "[α₁, α₂] = 0",
            f.alpha(1)?.commutator(&f.alpha(2)?)?,
        )),
        CheckId::T6_2_4 => eqs.push(Equation::zero(
            "[α₃, α₄] = 0",
            f.alpha(3)?.commutator(&f.alpha(4)?)?,
        )),
        CheckId::L6_2_5 => {
            let chi3 = ctx.reps.chi(3)?;
            let formula = AlgebraElement::from_coeffs(
                g,
                (0..n)
                    .map(|h| {
                        let first = quad(
                            &all,
                            &|k| chi3.value(g.mul_idx(g.inv_idx(k), h)).clone(),
                            &|k| g.mul_idx(g.inv_idx(k), h),
                        );
                        let second = quad(&all, &|k| chi3.value(k).clone(), &|k| {
                            g.mul_idx(g.inv_idx(k), h)
                        });
                        first.sub(&second)
                    })
                    .collect(),
            )?;
            eqs.push(Equation::element(
                "[α₁, α₃] = Σ_h Σ_g (χ₃(g⁻¹h) − χ₃(g)) x_g x_{g⁻¹h} h",
                f.alpha(1)?.commutator(&f.alpha(3)?)?,
                formula,
            ));
        }
        CheckId::L6_2_6 => {
            let chi3 = ctx.reps.chi(3)?;
            let r = g.require_rotation()?;
            for k in (1..r).step_by(2) {
                let h = g.a_pow(k as i64);
                eqs.push(Equation::scalar(
                    format!("h = {}: Σ_{{g∈⟨a⟩}} χ₃(g) x_g x_{{g⁻¹h}} = 0", g.name(h)),
                    quad(&rot, &|v| chi3.value(v).clone(), &|v| {
                        g.mul_idx(g.inv_idx(v), h)
                    }),
                    R::zero_in(field),
                ));
            }
        }
        CheckId::L6_2_7 | CheckId::L6_2_10 => {
            let comm =
                f.alpha(1)?
                    .commutator(&f.alpha(if id == CheckId::L6_2_7 { 3 } else { 4 })?)?;
            let r = g.require_rotation()?;
            for k in 0..r {
                let h = g.a_pow(k as i64);
                let formula = if id == CheckId::L6_2_7 {
                    coefficient_a_k_13(ctx, xs, k)?
                } else {
                    coefficient_a_k_14(ctx, xs, k)?
                };
                eqs.push(Equation::scalar(
                    format!("coefficient of {}", g.name(h)),
                    comm.coeff(h).clone(),
                    formula,
                ));
            }
        }
        CheckId::L6_2_8 | CheckId::L6_2_11 => {
            let comm =
                f.alpha(1)?
                    .commutator(&f.alpha(if id == CheckId::L6_2_8 { 3 } else { 4 })?)?;
            let r = g.require_rotation()?;
            for k in 0..r {
                let h = g.a_pow_b(k as i64);
                let formula = if id == CheckId::L6_2_8 {
                    coefficient_a_k_b_13(ctx, xs, k)?
                } else {
                    coefficient_a_k_b_14(ctx, xs, k)?
                };
                eqs.push(Equation::scalar(
                    format!("coefficient of {}", g.name(h)),
                    comm.coeff(h).clone(),
                    formula,
                ));
            }
        }
        CheckId::L6_2_9 => {
            let chi3 = ctx.reps.chi(3)?;
            let w = |v: usize| chi3.value(v).clone();
            let formula = AlgebraElement::from_coeffs(
                g,
                (0..n)
                    .map(|h| {
                        let mut c = quad(&rot, &w, &|v| g.mul_idx(h, v));
                        c.sub_assign(&quad(&off, &w, &|v| g.mul_idx(h, g.inv_idx(v))));
                        c.sub_assign(&quad(&rot, &w, &|v| g.mul_idx(v, h)));
                        c.add_assign(&quad(&off, &w, &|v| g.mul_idx(g.inv_idx(v), h)));
                        c
                    })
                    .collect(),
            )?;
            eqs.push(Equation::element(
                "[α₁, α₄] expansion",
                f.alpha(1)?.commutator(&f.alpha(4)?)?,
                formula,
            ));
        }
        CheckId::T6_2_13 => {
            eqs.extend(sum_commutators(&f)?);
            let r = g.require_rotation()?;
            for k in 0..r {
                let h = g.a_pow(k as i64);
                eqs.push(Equation::scalar(
                    format!("a^k closed forms cancel at {}", g.name(h)),
                    coefficient_a_k_13(ctx, xs, k)?.add(&coefficient_a_k_14(ctx, xs, k)?),
                    R::zero_in(field),
                ));
                let hb = g.a_pow_b(k as i64);
                eqs.push(Equation::scalar(
                    format!("a^k b closed forms cancel at {}", g.name(hb)),
                    coefficient_a_k_b_13(ctx, xs, k)?.add(&coefficient_a_k_b_14(ctx, xs, k)?),
                    R::zero_in(field),
                ));
            }
        }
        CheckId::PAIRING => {
            eqs.push(Equation::zero(
                "[α₁, α₂] = 0",
                f.alpha(1)?.commutator(&f.alpha(2)?)?,
            ));
            if ctx.reps.has_four_linear() {
                eqs.push(Equation::zero(
                    "[α₃, α₄] = 0",
                    f.alpha(3)?.commutator(&f.alpha(4)?)?,
                ));
                eqs.extend(sum_commutators(&f)?);
            }
        }
        CheckId::T3_1_2
        | CheckId::L4_1_1
        | CheckId::L4_2_1
        | CheckId::REPS
        | CheckId::NONVANISH
        | CheckId::T5_2_3_READING => unreachable!("driven separately"),
    }
    Ok(eqs)
}

/// `Σ_{g∈⟨a⟩} x_{gb} x_{other(g)}`.
fn coset_sum<R: Ring>(ctx: &GroupContext, xs: &[R], other: impl Fn(usize) -> usize) -> R {
    let g = &ctx.group;
    let b = g.a_pow_b(0);
    let r = g.rotation_order().expect("metacyclic");
    ring::sum(
        &ctx.field,
        (0..r).map(|k| {
            let rot = g.a_pow(k as i64);
            xs[g.mul_idx(rot, b)].mul(&xs[other(rot)])
        }),
    )
}

fn sum_commutators<R: Ring>(f: &Factors<'_, R>) -> Result<Vec<Equation<R>>> {
    let (a1, a2, a3, a4) = (f.alpha(1)?, f.alpha(2)?, f.alpha(3)?, f.alpha(4)?);
    let s12 = a1.add(&a2)?;
    let s34 = a3.add(&a4)?;
    Ok(vec![
        Equation::zero("[α₁, α₃ + α₄] = 0", a1.commutator(&s34)?),
        Equation::zero("[α₂, α₃ + α₄] = 0", a2.commutator(&s34)?),
        Equation::zero("[α₃, α₁ + α₂] = 0", a3.commutator(&s12)?),
        Equation::zero("[α₄, α₁ + α₂] = 0", a4.commutator(&s12)?),
    ])
}

/// `Σ_{g∈S} w(g) x_g x_{other(g)}`.
fn weighted_sum<R: Ring>(
    ctx: &GroupContext,
    xs: &[R],
    set: impl Fn(usize) -> bool,
    w: impl Fn(usize) -> CycloNumber,
    other: impl Fn(usize) -> usize,
) -> R {
    ring::sum(
        &ctx.field,
        (0..ctx.order())
            .filter(|&g| set(g))
            .map(|g| xs[g].mul(&xs[other(g)]).scale(&w(g))),
    )
}

fn parity_sign(ctx: &GroupContext, k: usize) -> CycloNumber {
    ctx.field.int(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// Closed form of the `a^k` coefficient of `[α₁, α₃]`.
fn coefficient_a_k_13<R: Ring>(ctx: &GroupContext, xs: &[R], k: usize) -> Result<R> {
    let g = &ctx.group;
    let chi3 = ctx.reps.chi(3)?;
    let h = g.a_pow(k as i64);
    let off = |v: usize| !g.in_rotation(v);
    let other = |v: usize| g.mul_idx(g.inv_idx(v), h);
    let inv_part = weighted_sum(ctx, xs, off, |v| chi3.value(g.inv_idx(v)).clone(), other);
    let plain = weighted_sum(ctx, xs, off, |v| chi3.value(v).clone(), other);
    Ok(inv_part.scale(&parity_sign(ctx, k)).sub(&plain))
}

/// Closed form of the `a^k` coefficient of `[α₁, α₄]`.
fn coefficient_a_k_14<R: Ring>(ctx: &GroupContext, xs: &[R], k: usize) -> Result<R> {
    let g = &ctx.group;
    let chi3 = ctx.reps.chi(3)?;
    let h = g.a_pow(k as i64);
    let off = |v: usize| !g.in_rotation(v);
    let other = |v: usize| g.mul_idx(g.inv_idx(v), h);
    let inv_part = weighted_sum(ctx, xs, off, |v| chi3.value(g.inv_idx(v)).clone(), other);
    let plain = weighted_sum(ctx, xs, off, |v| chi3.value(v).clone(), other);
    Ok(inv_part.scale(&parity_sign(ctx, k + 1)).add(&plain))
}

/// `(S₁, S₂) = (Σ_{g∈⟨a⟩} χ₃(g) x_g x_{gh}, Σ_{g∈⟨a⟩} χ₃(g) x_g x_{g⁻¹h})` at `h = a^k b`.
fn rotation_pair<R: Ring>(ctx: &GroupContext, xs: &[R], k: usize) -> Result<(R, R)> {
    let g = &ctx.group;
    let chi3 = ctx.reps.chi(3)?;
    let h = g.a_pow_b(k as i64);
    let rot = |v: usize| g.in_rotation(v);
    let w = |v: usize| chi3.value(v).clone();
    Ok((
        weighted_sum(ctx, xs, rot, w, |v| g.mul_idx(v, h)),
        weighted_sum(ctx, xs, rot, w, |v| g.mul_idx(g.inv_idx(v), h)),
    ))
}

/// `1 + i` for `k` odd, `1 − i` for `k` even.
fn one_plus_minus_i(ctx: &GroupContext, k: usize) -> CycloNumber {
    let i = ctx.field.imaginary_unit();
    let one = ctx.field.one();
    if k % 2 == 1 {
        &one + &i
    } else {
        &one - &i
    }
}

/// `Σ_{g∈G} χ₃(g) x_g x_{g⁻¹h}` at `h = a^k b`.
fn full_sum_a_k_b<R: Ring>(ctx: &GroupContext, xs: &[R], k: usize) -> Result<R> {
    let g = &ctx.group;
    let chi3 = ctx.reps.chi(3)?;
    let h = g.a_pow_b(k as i64);
    Ok(weighted_sum(
        ctx,
        xs,
        |_| true,
        |v| chi3.value(v).clone(),
        |v| g.mul_idx(g.inv_idx(v), h),
    ))
}

/// Closed form of the `a^k b` coefficient of `[α₁, α₃]`.
fn coefficient_a_k_b_13<R: Ring>(ctx: &GroupContext, xs: &[R], k: usize) -> Result<R> {
    if imaginary_branch(ctx) {
        let (s1, s2) = rotation_pair(ctx, xs, k)?;
        Ok(s1.sub(&s2).scale(&one_plus_minus_i(ctx, k)))
    } else if k % 2 == 1 {
        Ok(full_sum_a_k_b(ctx, xs, k)?.scale(&ctx.field.int(-2)))
    } else {
        Ok(R::zero_in(&ctx.field))
    }
}

/// Closed form of the `a^k b` coefficient of `[α₁, α₄]`.
fn coefficient_a_k_b_14<R: Ring>(ctx: &GroupContext, xs: &[R], k: usize) -> Result<R> {
    if imaginary_branch(ctx) {
        let (s1, s2) = rotation_pair(ctx, xs, k)?;
        Ok(s2.sub(&s1).scale(&one_plus_minus_i(ctx, k)))
    } else if k % 2 == 1 {
        Ok(full_sum_a_k_b(ctx, xs, k)?.scale(&ctx.field.int(2)))
    } else {
        Ok(R::zero_in(&ctx.field))
    }
}

// ---------------------------------------------------------------------------
// checkers with their own drivers

fn fourier_check(ctx: &GroupContext, cfg: &RunConfig) -> Result<CheckResult> {
    let g = &ctx.group;
    let n = ctx.order();
    let transform = |u: &AlgebraElement<CycloNumber>| fourier_transform(&ctx.reps, u);
    let symbolic = cfg.mode != Mode::Randomized;
    if symbolic {
        // bilinearity reduces the claim to the basis δ_g
        let result = CheckResult::new(CheckId::T3_1_2, ctx, "exhaustive");
        let basis: Vec<_> = (0..n)
            .map(|v| AlgebraElement::basis(g, &ctx.field, v))
            .collect();
        let images = basis.iter().map(transform).collect::<Result<Vec<_>>>()?;
        for u in 0..n {
            for v in 0..n {
                let lhs = transform(&basis[u].convolve(&basis[v])?)?;
                if lhs != images[u].mul(&images[v]) {
                    return Ok(result.fail(json!({
                        "equation": "T(δ_g δ_h) = T(δ_g) T(δ_h)",
                        "g": g.name(u),
                        "h": g.name(v),
                    })));
                }
            }
        }
        return Ok(result);
    }
    let result = CheckResult::randomized(CheckId::T3_1_2, ctx, cfg);
    for t in 0..cfg.trials {
        let mut stream = PointStream::new(ctx, cfg.seed, t);
        let (fv, hv) = (stream.next(), stream.next());
        let fe = AlgebraElement::from_coeffs(g, ctx.point(&fv))?;
        let he = AlgebraElement::from_coeffs(g, ctx.point(&hv))?;
        if transform(&fe.convolve(&he)?)? != transform(&fe)?.mul(&transform(&he)?) {
            return Ok(result.fail(json!({
                "equation": "T(f * h) = T(f) T(h)",
                "trial": t,
                "f": assignment_json(ctx, &fv),
                "h": assignment_json(ctx, &hv),
            })));
        }
    }
    Ok(result)
}

fn normal_form_check(id: CheckId, ctx: &GroupContext) -> CheckResult {
    let g = &ctx.group;
    let result = CheckResult::new(id, ctx, "exhaustive");
    let m = g.m().expect("metacyclic") as usize;
    let r = g.rotation_order().unwrap();
    let expected = if g.family() == Family::Dihedral {
        2 * m
    } else {
        4 * m
    };
    let fail = |what: String| result.clone().fail(json!({ "violation": what }));
    if g.order() != expected {
        return fail(format!("order {} ≠ {expected}", g.order()));
    }
    let a = g.a_pow(1);
    let b = g.a_pow_b(0);
    let power = |x: usize, k: usize| (0..k).fold(g.identity(), |acc, _| g.mul_idx(acc, x));
    // a^k b^l through the group law, not through the stored normal form
    let mut seen = vec![false; g.order()];
    for l in 0..2 {
        for k in 0..r {
            let w = g.mul_idx(power(a, k), power(b, l));
            if seen[w] {
                return fail(format!("a^{k} b^{l} repeats {}", g.name(w)));
            }
            seen[w] = true;
        }
    }
    if power(a, r) != g.identity() {
        return fail(format!("a^{r} ≠ e"));
    }
    let b2 = if g.family() == Family::Dihedral {
        g.identity()
    } else {
        power(a, m)
    };
    if power(b, 2) != b2 {
        return fail(format!("b² ≠ {}", g.name(b2)));
    }
    if g.mul_idx(g.mul_idx(g.inv_idx(b), a), b) != g.inv_idx(a) {
        return fail("b⁻¹ab ≠ a⁻¹".to_string());
    }
    result
}

fn table_check(ctx: &GroupContext) -> CheckResult {
    let g = &ctx.group;
    let n = ctx.order();
    let result = CheckResult::new(CheckId::REPS, ctx, "exhaustive");
    let fail = |what: String| result.clone().fail(json!({ "violation": what }));
    if ctx.reps.dimension_count() != n {
        return fail(format!("Σ d² = {} ≠ {n}", ctx.reps.dimension_count()));
    }
    if let Some(m) = g.m() {
        let m = m as usize;
        let expected = match (g.family(), m % 2) {
            (Family::Dihedral, 1) => 2 + (m - 1) / 2,
            (Family::Dihedral, _) => 4 + m / 2 - 1,
            _ => 4 + (m - 1),
        };
        if ctx.reps.len() != expected {
            return fail(format!(
                "{} representations, expected {expected}",
                ctx.reps.len()
            ));
        }
    }
    for rep in ctx.reps.reps() {
        if rep.matrix(g.identity()) != SmallMatrix::identity(rep.degree(), &ctx.field) {
            return fail(format!("{}(e) ≠ I", rep.name()));
        }
        if let Representation::Linear(chi) = rep {
            if let Some(v) = (0..n).find(|&v| !chi.value(v).is_root_of_unity()) {
                return fail(format!(
                    "{}({}) is not a root of unity",
                    rep.name(),
                    g.name(v)
                ));
            }
        }
        for u in 0..n {
            for v in 0..n {
                if rep.matrix(g.mul_idx(u, v)) != rep.matrix(u).mul(&rep.matrix(v)) {
                    return fail(format!(
                        "{0}({1}·{2}) ≠ {0}({1}){0}({2})",
                        rep.name(),
                        g.name(u),
                        g.name(v)
                    ));
                }
            }
        }
    }
    result
}

/// Searches random points for a nonzero coefficient of each commutator.
fn nonvanish_check(ctx: &GroupContext, cfg: &RunConfig) -> Result<CheckResult> {
    let result = CheckResult::randomized(CheckId::NONVANISH, ctx, cfg);
    let pairs = [("[α₁, α₃]", 1, 3), ("[α₁, α₄]", 1, 4), ("[α₂, α₄]", 2, 4)];
    let mut witnesses = Map::new();
    for (label, i, j) in pairs {
        let mut found = None;
        for t in 0..cfg.trials.max(1) {
            let values = PointStream::new(ctx, cfg.seed, t).next();
            let point = ctx.point(&values);
            let f = Factors::new(ctx, &point);
            let comm = f.alpha(i)?.commutator(&f.alpha(j)?)?;
            if let Some(g) = comm.coeffs().iter().position(|c| !c.is_zero()) {
                found = Some(json!({
                    "trial": t,
                    "assignment": assignment_json(ctx, &values),
                    "element": ctx.group.name(g),
                    "value": comm.coeff(g).to_string(),
                }));
                break;
            }
        }
        match found {
            Some(w) => {
                witnesses.insert(label.to_string(), w);
            }
            None => {
                return Ok(result.fail(json!({
                    "commutator": label,
                    "error": "vanished at every sampled point",
                })))
            }
        }
    }
    Ok(CheckResult {
        witness: Some(Value::Object(witnesses)),
        ..result
    })
}

/// Confirms the product with `A_g` coefficients and refutes the one with `x_g`.
fn reading_check(ctx: &GroupContext, cfg: &RunConfig) -> Result<CheckResult> {
    let a_reading = equation_check(CheckId::T5_2_3, ctx, cfg)?;
    let mut result = CheckResult {
        id: CheckId::T5_2_3_READING,
        ..a_reading.clone()
    };
    if a_reading.status != Status::Pass {
        return Ok(result);
    }
    let mut counterexample = None;
    for t in 0..cfg.trials.max(1) {
        let values = PointStream::new(ctx, cfg.seed, t).next();
        let point = ctx.point(&values);
        let lhs = AlgebraElement::scalar(&ctx.group, theta(ctx, &point));
        let rhs = rotation_product(ctx, &point)?;
        if let Some(g) = (0..ctx.order()).find(|&g| lhs.coeff(g) != rhs.coeff(g)) {
            counterexample = Some(json!({
                "trial": t,
                "assignment": assignment_json(ctx, &values),
                "element": ctx.group.name(g),
                "theta_e": lhs.coeff(g).to_string(),
                "product": rhs.coeff(g).to_string(),
            }));
            break;
        }
    }
    let a_text = format!("holds ({})", a_reading.mode);
    match counterexample {
        Some(cx) => {
            result.witness = Some(json!({
                "a_reading": a_text,
                "x_reading": "refuted",
                "x_reading_counterexample": cx,
            }));
        }
        None => {
            result = result.fail(json!({
                "a_reading": a_text,
                "x_reading": "agreed with Θ(G)e at every sampled point",
            }));
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(spec: &str) -> GroupContext {
        GroupContext::parse(spec).unwrap()
    }

    #[test]
    fn ids_round_trip() {
        for &id in CheckId::ALL {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
        }
        assert_eq!("t6.2.3".parse::<CheckId>().unwrap(), CheckId::T6_2_3);
        assert!(matches!(
            "X9".parse::<CheckId>(),
            Err(Error::UnknownCheck(_))
        ));
    }

    #[test]
    fn random_assignment_contract() {
        let c = ctx("D4");
        let a = random_values(8, 3, 80);
        assert_eq!(a, random_values(8, 3, 80));
        assert_ne!(a, random_values(8, 4, 80));
        assert!(a.iter().all(|v| (-80..=80).contains(v)));
        assert_eq!(random_assignment(&c, 3, 80), c.point(&a));
    }

    #[test]
    fn applicability_by_family() {
        let c6 = ctx("C6");
        assert_eq!(
            applicability(CheckId::T3_2_1, &c6),
            Applicability::Applicable
        );
        assert!(matches!(
            applicability(CheckId::L5_1_1, &c6),
            Applicability::Inapplicable(_)
        ));
        let d3 = ctx("D3");
        assert!(matches!(
            applicability(CheckId::T6_2_4, &d3),
            Applicability::Skip(_)
        ));
        assert!(matches!(
            applicability(CheckId::T3_2_1, &d3),
            Applicability::Inapplicable(_)
        ));
        let d4 = ctx("D4");
        assert!(list_checks(&d4)
            .iter()
            .filter(
                |(id, _)| id.as_str().starts_with('L') && id.as_str() != "L4.2.1"
                    || id.as_str().starts_with("T6")
            )
            .all(|(_, a)| *a == Applicability::Applicable));
    }

    #[test]
    fn inapplicable_is_an_error() {
        let c = ctx("C4");
        assert!(matches!(
            run_check(CheckId::T6_2_3, &c, &RunConfig::default()),
            Err(Error::Inapplicable { .. })
        ));
    }

    #[test]
    fn skip_carries_reason() {
        let c = ctx("D3");
        let r = run_check(CheckId::T6_2_4, &c, &RunConfig::default()).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert_eq!(r.reason.as_deref(), Some("α₃ undefined: m odd"));
    }

    #[test]
    fn small_symbolic_checks_pass() {
        let cfg = RunConfig {
            mode: Mode::Symbolic,
            ..RunConfig::default()
        };
        for spec in ["C2", "D3", "Q2"] {
            let c = ctx(spec);
            for r in run_all(&c, &cfg) {
                assert_ne!(r.status, Status::Fail, "{spec} {}: {:?}", r.id, r.witness);
            }
        }
    }

    #[test]
    fn forced_symbolic_above_limit_skips_heavy_checks() {
        let c = ctx("D5");
        let cfg = RunConfig {
            mode: Mode::Symbolic,
            ..RunConfig::default()
        };
        let r = run_check(CheckId::T5_1_5, &c, &cfg).unwrap();
        assert_eq!(r.status, Status::Skipped);
        let r = run_check(CheckId::T6_2_3, &c, &cfg).unwrap();
        assert_eq!((r.status, r.mode.as_str()), (Status::Pass, "symbolic"));
    }
}
