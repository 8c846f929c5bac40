//! One function per subcommand, each returning the JSON report.

use crate::input::{self, InputError};
use gkz_core::analysis::{
    apply_system, assemble, fuchs_polygon, fuchs_svg, gamma_series, generic_rank, gkz_to_univariate, is_resonant,
    is_strongly_resonant, monomial_curve_rank, slopes_along_hyperplane, univariate_to_gkz, DiffOperator,
    StrongResonance, ThetaOperator, UnivariateForm, UnivariateOp,
};
use gkz_core::hodge::{
    fedorov_numbers, operator_from_params, sabbah_yu_with, AlphaReading, HodgeNumbers, HypergeomParams,
};
use gkz_core::lattice::{is_saturated, validate, Saturation};
use gkz_core::num::{fmt_rat, Int, Rat, RatVector};
use gkz_core::polyhedral::{
    regular_triangulation, simplicial_volume, umbrella, umbrella_jumps, umbrella_svg, Triangulation,
    Window,
};
use gkz_core::toric::{
    initial_ideal, irreducible_decomposition, standard_pairs, toric_ideal_generators, InitialIdeal, MonomialIdeal,
};
use gkz_core::{Error, GkzMatrix, IntMatrix};
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

/// Everything that can stop a command.
#[derive(Debug)]
pub enum Failure {
    Input(InputError),
    Core(Error),
    Io(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

pub type Outcome = Result<Value, Failure>;

fn r(x: &Rat) -> Value {
    Value::String(fmt_rat(x))
}

fn rats(xs: &[Rat]) -> Value {
    Value::Array(xs.iter().map(r).collect())
}

fn int(x: &Int) -> Value {
    Value::String(x.to_string())
}

fn ints(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

fn one_based(xs: &[usize]) -> Value {
    Value::Array(xs.iter().map(|x| json!(x + 1)).collect())
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.data().iter().map(|row| ints(row)).collect())
}

/// Exact data attached to an error, when there is any.
pub fn certificate(e: &Error) -> Value {
    match e {
        Error::NotFull { diagonal } => json!({ "smith_diagonal": ints(diagonal) }),
        Error::NotPointed { relation } => json!({ "relation": rats(relation) }),
        Error::NonGenericWeight { face } | Error::FaceNotInUmbrella { face } => json!({ "face": one_based(face) }),
        Error::NonGlobalOrder { weight } => json!({ "weight": rats(weight) }),
        Error::NonPrimitiveKernel { gcd } => json!({ "gcd": int(gcd) }),
        Error::CorankNotOne { corank } => json!({ "corank": corank }),
        Error::ResonantParameter { difference } => json!({ "difference": rats(difference) }),
        Error::SingularConversion(s) => json!({ "slope": r(s) }),
        Error::ListsIntersect(x) => json!({ "value": r(x) }),
        Error::DimensionMismatch { expected, found } => json!({ "expected": expected, "found": found }),
        Error::NotRegularCase { m_prime, m } | Error::NotConfluentCase { m_prime, m } => {
            json!({ "m_prime": m_prime, "m": m })
        }
        _ => Value::Null,
    }
}

fn checked_matrix(value: &str) -> Result<GkzMatrix, Failure> {
    Ok(validate(input::matrix("--A", value)?)?)
}

fn weight_arg(value: &str) -> Result<RatVector, Failure> {
    Ok(RatVector::new(input::rationals("--weight", value)?))
}

fn window_arg(value: &str) -> Result<Window, Failure> {
    Window::parse(value).map_err(|message| Failure::Input(InputError { argument: "--window".into(), column: 1, message }))
}

fn triangulation_json(t: &Triangulation) -> Value {
    json!({
        "cells": t.cells.iter().map(|c| one_based(c)).collect::<Vec<_>>(),
        "volumes": ints(&t.volumes),
        "total_volume": int(&t.total_volume()),
    })
}

fn triangulation_or_face(g: &GkzMatrix, w: &RatVector) -> Result<Value, Failure> {
    match regular_triangulation(g, w) {
        Ok(t) => {
            let mut v = triangulation_json(&t);
            v.as_object_mut().expect("object").insert("generic".into(), json!(true));
            Ok(v)
        }
        Err(Error::NonGenericWeight { face }) => Ok(json!({ "generic": false, "non_simplex_face": one_based(&face) })),
        Err(e) => Err(e.into()),
    }
}

fn saturation_json(s: &Saturation) -> Value {
    match s {
        Saturation::Yes => json!("yes"),
        Saturation::No { .. } => json!("no"),
        Saturation::Unknown => json!("unknown"),
    }
}

fn strong_json(s: &StrongResonance) -> Value {
    match s {
        StrongResonance::Yes { column, shift, face, base } => json!({
            "verdict": "yes",
            "column": column + 1,
            "shift": shift,
            "face": one_based(face),
            "base": rats(base),
        }),
        StrongResonance::No { certificate } => json!({ "verdict": "no", "certificate": certificate }),
        StrongResonance::Unknown => json!({ "verdict": "unknown" }),
    }
}

pub struct AnalyzeArgs<'a> {
    pub a: &'a str,
    pub beta: Option<&'a str>,
    pub weight: Option<&'a str>,
    pub bound: u64,
}

pub fn analyze(args: &AnalyzeArgs) -> Outcome {
    let g = checked_matrix(args.a)?;
    let beta = match args.beta {
        Some(b) => RatVector::new(input::rationals("--beta", b)?),
        None => RatVector::zeros(g.d()),
    };
    let weight = args.weight.map(weight_arg).transpose()?;
    let saturation = is_saturated(&g, args.bound)?;
    let resonance = is_resonant(&g, &beta)?;
    let strong = is_strongly_resonant(&g, &beta, args.bound)?;
    let generic = generic_rank(&g)?;
    let special = if g.d() == 2 && g.is_homogeneous() && beta.is_integral() {
        let b: Vec<Int> = beta.iter().map(|x| x.to_integer()).collect();
        Some(monomial_curve_rank(&g, &b)?)
    } else {
        None
    };
    let mut report = Map::new();
    report.insert(
        "input".into(),
        json!({
            "A": matrix_json(g.matrix()),
            "beta": rats(&beta),
            "weight": weight.as_ref().map(|w| rats(w)),
        }),
    );
    report.insert(
        "flags".into(),
        json!({
            "full": g.is_full(),
            "pointed": g.is_pointed(),
            "homogeneous": g.is_homogeneous(),
            "saturated": saturation_json(&saturation),
        }),
    );
    if let Saturation::No { witness } = &saturation {
        report.insert("hole".into(), ints(witness));
    }
    report.insert("volume".into(), int(&simplicial_volume(&g)?));
    report.insert(
        "resonance".into(),
        json!({
            "resonant": resonance.resonant,
            "facet": resonance.facet.map(|f| one_based(&f.columns)),
            "strong": strong_json(&strong),
        }),
    );
    report.insert("rank".into(), json!({ "generic": int(&generic), "at_beta": special.as_ref().map(int) }));
    if let Some(w) = &weight {
        let u = umbrella(&g, w)?;
        report.insert(
            "umbrella".into(),
            json!({
                "facets": u.facets().iter().map(|f| one_based(&f.columns)).collect::<Vec<_>>(),
                "faces": u.faces.len(),
            }),
        );
        report.insert("triangulation".into(), triangulation_or_face(&g, w)?);
        let truncation = default_truncation(w);
        let series = match gamma_series(&g, &beta, w, &truncation) {
            Ok(s) => json!({
                "count": s.len(),
                "exponents": s.iter().map(|x| rats(&x.exponent)).collect::<Vec<_>>(),
            }),
            Err(e @ (Error::ResonantParameter { .. } | Error::NonGenericWeight { .. })) => {
                json!({ "unavailable": e.kind() })
            }
            Err(e) => return Err(e.into()),
        };
        report.insert("series".into(), series);
    }
    report.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    report.insert("deterministic".into(), json!(true));
    Ok(Value::Object(report))
}

/// `8 max |L_j|`, at least one.
pub fn default_truncation(w: &RatVector) -> Rat {
    let top = w.iter().map(|x| x.abs()).max().unwrap_or_else(Rat::zero);
    let t = top * Rat::from_integer(8.into());
    if t.is_zero() {
        Rat::from_integer(1.into())
    } else {
        t
    }
}

fn write_svg(path: &str, svg: &str) -> Result<(), Failure> {
    std::fs::write(path, svg).map_err(|e| Failure::Io(format!("cannot write '{path}': {e}")))
}

pub struct UmbrellaArgs<'a> {
    pub a: &'a str,
    pub weight: &'a str,
    pub direction: Option<&'a str>,
    pub window: &'a str,
    pub svg: Option<&'a str>,
}

pub fn umbrella_cmd(args: &UmbrellaArgs) -> Outcome {
    let g = checked_matrix(args.a)?;
    let w = weight_arg(args.weight)?;
    let u = umbrella(&g, &w)?;
    let faces: Vec<Value> = u
        .faces
        .iter()
        .map(|f| json!({ "columns": one_based(&f.columns), "dim": f.dim, "normal": rats(&f.supporting_normal) }))
        .collect();
    let mut out = Map::new();
    out.insert("weight".into(), rats(&w));
    out.insert("facets".into(), Value::Array(u.facets().iter().map(|f| one_based(&f.columns)).collect()));
    out.insert("faces".into(), Value::Array(faces));
    out.insert("triangulation".into(), triangulation_or_face(&g, &w)?);
    if let Some(dir) = args.direction {
        let direction = RatVector::new(input::rationals("--direction", dir)?);
        let window = window_arg(args.window)?;
        let jumps = umbrella_jumps(&g, &w, &direction, &window)?;
        out.insert("jumps".into(), rats(&jumps));
    }
    if let Some(path) = args.svg {
        write_svg(path, &umbrella_svg(&g, &u)?)?;
    }
    Ok(Value::Object(out))
}

pub fn slopes(a: &str, hyperplane: usize, window: &str) -> Outcome {
    let g = checked_matrix(a)?;
    let window = window_arg(window)?;
    if hyperplane == 0 {
        return Err(Failure::Input(InputError {
            argument: "--hyperplane".into(),
            column: 1,
            message: "hyperplanes are numbered from 1".into(),
        }));
    }
    let s = slopes_along_hyperplane(&g, hyperplane - 1, &window)?;
    Ok(json!({ "slopes": rats(&s) }))
}

pub struct SeriesArgs<'a> {
    pub a: &'a str,
    pub beta: &'a str,
    pub weight: &'a str,
    pub truncation: Option<&'a str>,
}

pub fn series(args: &SeriesArgs) -> Outcome {
    let g = checked_matrix(args.a)?;
    let beta = RatVector::new(input::rationals("--beta", args.beta)?);
    let w = weight_arg(args.weight)?;
    let truncation = match args.truncation {
        Some(t) => {
            let v = input::rationals("--truncation", t)?;
            match v.as_slice() {
                [x] => x.clone(),
                _ => {
                    return Err(Failure::Input(InputError {
                        argument: "--truncation".into(),
                        column: 1,
                        message: "expected a single rational".into(),
                    }))
                }
            }
        }
        None => default_truncation(&w),
    };
    let all = gamma_series(&g, &beta, &w, &truncation)?;
    let sys = assemble(&g, &beta)?;
    let items: Vec<Value> = all
        .iter()
        .map(|s| {
            let residuals = apply_system(&sys, s);
            let lowest = residuals.iter().map(|x| x.weight.clone()).min();
            json!({
                "exponent": rats(&s.exponent),
                "cell": one_based(&s.cell),
                "terms": s.terms.iter().map(|(u, c)| json!({
                    "shift": ints(u),
                    "weight": r(&s.weight_of(u)),
                    "coefficient": r(c),
                })).collect::<Vec<_>>(),
                "lowest_residual_weight": lowest.as_ref().map(r),
            })
        })
        .collect();
    Ok(json!({
        "truncation": r(&truncation),
        "count": all.len(),
        "system": sys.to_text(),
        "series": items,
    }))
}

fn initial_json(i: &InitialIdeal) -> Value {
    match i {
        InitialIdeal::Monomial(m) => json!({
            "monomial": true,
            "ideal": m.to_string(),
            "complex": m.complex().facets().iter().map(|f| one_based(f)).collect::<Vec<_>>(),
        }),
        InitialIdeal::NonGeneric(forms) => json!({
            "monomial": false,
            "forms": forms.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        }),
    }
}

pub fn toric(a: &str, weight: Option<&str>) -> Outcome {
    let g = GkzMatrix::analyze(input::matrix("--A", a)?);
    let gens = toric_ideal_generators(&g)?;
    let mut out = Map::new();
    out.insert("generators".into(), json!(gens.iter().map(|b| b.to_string()).collect::<Vec<_>>()));
    if let Some(w) = weight {
        let w = weight_arg(w)?;
        out.insert("initial_ideal".into(), initial_json(&initial_ideal(&g, &w)?));
    }
    Ok(Value::Object(out))
}

fn pairs_json(m: &MonomialIdeal) -> Value {
    json!({
        "ideal": m.to_string(),
        "standard_pairs": standard_pairs(m).iter().map(|p| json!({
            "base": p.base,
            "face": one_based(&p.face),
            "text": p.to_string(),
        })).collect::<Vec<_>>(),
        "decomposition": irreducible_decomposition(m).iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

/// Standard pairs either of an explicit ideal (rows are exponent vectors)
/// or of the initial ideal of `I_A` for a weight.
pub fn stdpairs(ideal: Option<&str>, vars: Option<usize>, a: Option<&str>, weight: Option<&str>) -> Outcome {
    match (ideal, a, weight) {
        (Some(text), None, None) => {
            let m = input::matrix("--ideal", text)?;
            let n = vars.unwrap_or(m.cols());
            let gens: Vec<Vec<u32>> = m
                .data()
                .iter()
                .map(|row| row.iter().map(|x| x.to_u32()).collect::<Option<Vec<u32>>>())
                .collect::<Option<_>>()
                .filter(|g: &Vec<Vec<u32>>| g.iter().all(|e| e.len() == n))
                .ok_or_else(|| {
                    Failure::Input(InputError {
                        argument: "--ideal".into(),
                        column: 1,
                        message: "exponents must be nonnegative and match the number of variables".into(),
                    })
                })?;
            // the row "0 ... 0" alone stands for the unit ideal; no rows cannot be written
            Ok(pairs_json(&MonomialIdeal::new(n, gens)))
        }
        (None, Some(a), Some(w)) => {
            let g = GkzMatrix::analyze(input::matrix("--A", a)?);
            let w = weight_arg(w)?;
            match initial_ideal(&g, &w)? {
                InitialIdeal::Monomial(m) => Ok(pairs_json(&m)),
                InitialIdeal::NonGeneric(forms) => {
                    let face: Vec<usize> = forms
                        .iter()
                        .find(|f| f.len() > 1)
                        .map(|f| {
                            let mut support: Vec<usize> = f
                                .terms()
                                .flat_map(|(e, _)| e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(j, _)| j))
                                .collect();
                            support.sort_unstable();
                            support.dedup();
                            support
                        })
                        .unwrap_or_default();
                    Err(Error::NonGenericWeight { face }.into())
                }
            }
        }
        _ => Err(Failure::Input(InputError {
            argument: "stdpairs".into(),
            column: 1,
            message: "give either --ideal, or --A together with --weight".into(),
        })),
    }
}

pub struct FuchsArgs<'a> {
    pub terms: Option<&'a str>,
    pub theta: bool,
    pub lambda: Option<&'a str>,
    pub mu: Option<&'a str>,
    pub infinity: bool,
    pub svg: Option<&'a str>,
}

fn term_triples(rows: Vec<Vec<Rat>>) -> Result<Vec<(u32, u32, Rat)>, Failure> {
    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            let bad = || {
                Failure::Input(InputError {
                    argument: "--terms".into(),
                    column: 1,
                    message: format!("term {} must be 'r s c' with r, s nonnegative integers", i + 1),
                })
            };
            match row.as_slice() {
                [a, b, c] if a.is_integer() && b.is_integer() => {
                    let a = a.to_integer().to_u32().ok_or_else(bad)?;
                    let b = b.to_integer().to_u32().ok_or_else(bad)?;
                    Ok((a, b, c.clone()))
                }
                _ => Err(bad()),
            }
        })
        .collect()
}

pub fn fuchs(args: &FuchsArgs) -> Outcome {
    let theta: Option<ThetaOperator> = match (args.terms, args.lambda) {
        (Some(t), None) => {
            let triples = term_triples(input::rational_rows("--terms", t)?)?;
            if args.theta {
                Some(ThetaOperator::from_terms(triples))
            } else {
                if args.infinity {
                    return Err(Failure::Input(InputError {
                        argument: "--infinity".into(),
                        column: 1,
                        message: "the chart at infinity needs --theta terms".into(),
                    }));
                }
                let op = DiffOperator::from_terms(triples);
                return polygon_report(&op, args.svg);
            }
        }
        (None, Some(l)) => {
            let lambda = input::rationals("--lambda", l)?;
            let mu = input::rationals("--mu", args.mu.unwrap_or(""))?;
            Some(operator_from_params(&HypergeomParams::new(lambda, mu)?))
        }
        _ => None,
    };
    let Some(theta) = theta else {
        return Err(Failure::Input(InputError {
            argument: "fuchs".into(),
            column: 1,
            message: "give either --terms or --lambda/--mu".into(),
        }));
    };
    let theta = if args.infinity { theta.at_infinity() } else { theta };
    polygon_report(&theta.to_diff(), args.svg)
}

fn polygon_report(op: &DiffOperator, svg: Option<&str>) -> Outcome {
    let f = fuchs_polygon(op)?;
    if let Some(path) = svg {
        write_svg(path, &fuchs_svg(&f))?;
    }
    let pair = |p: &(i64, i64)| json!([p.0, p.1]);
    Ok(json!({
        "operator": op.terms.iter().map(|((r, s), c)| json!([r, s, fmt_rat(c)])).collect::<Vec<_>>(),
        "points": f.points.iter().map(pair).collect::<Vec<_>>(),
        "hull": f.hull_vertices.iter().map(pair).collect::<Vec<_>>(),
        "slopes": rats(&f.slopes),
        "regular": f.regular,
    }))
}

fn hodge_json(h: &HodgeNumbers) -> Value {
    Value::Object(h.grading.iter().map(|(level, count)| (fmt_rat(level), json!(count))).collect())
}

pub fn hodge(regular: bool, lambda: &str, mu: &str, omit_alpha: bool) -> Outcome {
    let p = HypergeomParams::new(input::rationals("--lambda", lambda)?, input::rationals("--mu", mu)?)?;
    let h = if regular {
        fedorov_numbers(&p)?
    } else {
        sabbah_yu_with(&p, if omit_alpha { AlphaReading::Omit } else { AlphaReading::Lambda })?
    };
    Ok(hodge_json(&h))
}

pub struct ConvertArgs<'a> {
    pub v: Option<&'a str>,
    pub c: Option<&'a str>,
    pub alpha: Option<&'a str>,
    pub beta_params: Option<&'a str>,
    pub a: Option<&'a str>,
    pub beta: Option<&'a str>,
}

fn operator_json(op: &UnivariateOp) -> Value {
    let (alpha, beta) = op.monodromy_parameters();
    let (v, c) = op.general_data();
    json!({
        "operator": op.to_string(),
        "v": ints(&v),
        "c": rats(&c),
        "pfq": op.to_pfq().map(|p| match &p.form {
            UnivariateForm::Pfq { alpha, beta } => json!({ "alpha": rats(alpha), "beta": rats(beta) }),
            UnivariateForm::General { .. } => Value::Null,
        }),
        "monodromy": { "alpha": rats(&alpha), "beta": rats(&beta) },
    })
}

/// Univariate operator to GKZ data, or back.
pub fn convert(args: &ConvertArgs) -> Outcome {
    let op = match (args.v, args.alpha, args.a) {
        (Some(v), None, None) => {
            let v = input::integers("--v", v)?;
            let c = match args.c {
                Some(c) => input::rationals("--c", c)?,
                None => vec![Rat::zero(); v.len()],
            };
            Some(UnivariateOp::general(v, c)?)
        }
        (None, Some(alpha), None) => Some(UnivariateOp::pfq(
            input::rationals("--alpha", alpha)?,
            input::rationals("--beta-params", args.beta_params.unwrap_or(""))?,
        )?),
        (None, None, Some(a)) => {
            let g = checked_matrix(a)?;
            let beta = match args.beta {
                Some(b) => RatVector::new(input::rationals("--beta", b)?),
                None => RatVector::zeros(g.d()),
            };
            let op = gkz_to_univariate(&g, &beta)?;
            return Ok(json!({ "A": matrix_json(g.matrix()), "beta": rats(&beta), "univariate": operator_json(&op) }));
        }
        _ => None,
    };
    let Some(op) = op else {
        return Err(Failure::Input(InputError {
            argument: "convert".into(),
            column: 1,
            message: "give exactly one of --v, --alpha or --A".into(),
        }));
    };
    let (g, beta) = univariate_to_gkz(&op)?;
    let sys = assemble(&g, &beta)?;
    Ok(json!({
        "A": matrix_json(g.matrix()),
        "beta": rats(&beta),
        "system": sys.to_text(),
        "univariate": operator_json(&op),
    }))
}
