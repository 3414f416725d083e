use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use scrollfano_core::census::{match_table, CensusMode, CensusQuery};
use scrollfano_core::geometry::Normalization;
use scrollfano_core::grammar::{parse_boundary, parse_class, parse_variety};
use scrollfano_core::logfano::{
    check_pair, conductor_adjunction_check, family, verify_family, BoundarySpec, FamilyId,
    LogFanoPair,
};
use scrollfano_core::sections::{
    h0_lattice, h0_scroll, member_status, monomial_summary, snc_obstruction,
};
use scrollfano_core::{BaseSpace, DivisorClass, ScrollVariety};

use crate::document::{
    component, dec, CurveDegree, InstancePayload, MatchPayload, ObstructionPayload, PairPayload,
    RowPayload, StatusPayload,
};
use crate::{markdown, parallel_census, CliError, Exit, Outcome, OutputDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum H0Method {
    Pushforward,
    Lattice,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

/// One-paragraph description of what a command computes, for `--explain`.
pub fn explain(command: &str) -> &'static str {
    match command {
        "info" => "Normalizes the twists (subtract the componentwise minimum, sort), then reports -K_X = (-K_V - sum b_i; t+1) and the nef and effective cones. Nefness is tested on the invariant curves: fiber lines and lines in the sections cut out by each summand.",
        "h0" => "Counts sections of O(m; n) as the number of Cox-ring monomials x^P y^Q with |Q| = n and base degree m + sum Q_i b_i: the pushforward sum over Sym^n of the bundle. The lattice method counts the same monomials as lattice points of the polytope of D = sum c_i D_i + d H over a projective space.",
        "members" => "Lists the forced multiplicity of every sub-bundle in the linear system (minimum exponent over all monomials), the resulting member verdict, and any monomial obstruction to simple normal crossings along coordinate strata.",
        "check" => "Computes the adjoint class -(K_X + D) and tests ampleness on the invariant curves. The index is the gcd of its coordinates, the pseudoindex its minimum curve degree. Every sub-bundle component is checked against adjunction with its conductor.",
        "gallery" => "Rebuilds every known family of large index for the given r and twist range and recomputes dimension, log Fano property, index, pseudoindex and the dimension of the boundary's linear system.",
        "census" => "Enumerates normalized scrolls of dimension n with twists up to the cap, every boundary class in a box bounded by effectivity and adjoint positivity, keeps pairs whose adjoint is ample and meets the threshold and whose members can be reduced snc, and matches the survivors against the family gallery.",
        _ => "",
    }
}

fn variety(src: &str) -> Result<Normalization, CliError> {
    parse_variety(src).map_err(CliError::input(src))
}

/// Parses a class in the raw coordinates of `norm` and moves it to the
/// normalized scroll.
fn class(norm: &Normalization, src: &str) -> Result<DivisorClass, CliError> {
    let raw = parse_class(src).map_err(CliError::input(src))?;
    norm.scroll
        .check_class(&raw)
        .map_err(CliError::input(src))?;
    Ok(norm.class(&raw))
}

#[derive(Serialize)]
struct VarietyInputs<'a> {
    variety: &'a str,
    normalized: String,
    shift: Vec<String>,
}

impl<'a> VarietyInputs<'a> {
    fn new(src: &'a str, norm: &Normalization) -> Self {
        VarietyInputs {
            variety: src,
            normalized: norm.scroll.to_string(),
            shift: norm.shift.iter().map(dec).collect(),
        }
    }
}

pub fn info(src: &str) -> Result<Outcome, CliError> {
    let norm = variety(src)?;
    let x = &norm.scroll;
    let minus_k = x.anticanonical();
    let results = json!({
        "variety": x.to_string(),
        "base": x.base().to_string(),
        "dim": dec(x.dim()),
        "picard_rank": dec(x.picard_rank()),
        "anticanonical": minus_k.to_string(),
        "nef_cone": x.nef_cone_generators().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "effective_cone": x.effective_cone_generators().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "anticanonical_degrees": x
            .invariant_curves()
            .into_iter()
            .map(|c| CurveDegree::new(c, x.degree(&minus_k, c)))
            .collect::<Vec<_>>(),
    });
    Ok(Outcome {
        document: OutputDocument::new("info", VarietyInputs::new(src, &norm), results),
        exit: Exit::Success,
        text: None,
    })
}

/// Lattice count of `(m; n)` written as `n D_1 + (m + n a_1) H`.
fn lattice_count(x: &ScrollVariety, class: &DivisorClass) -> Result<BigUint, CliError> {
    if !matches!(x.base(), BaseSpace::ProjSpace(_)) {
        return Err(CliError::Usage(format!(
            "the lattice method needs a projective-space base, got {}",
            x.base()
        )));
    }
    let t = x.fiber_dim();
    let mut c = vec![0; t];
    c[0] = class.fiber;
    let d = class.base[0] + class.fiber * x.twists()[1][0];
    h0_lattice(x, &c, d).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn h0(src: &str, class_src: &str, method: H0Method) -> Result<Outcome, CliError> {
    let norm = variety(src)?;
    let x = &norm.scroll;
    let c = class(&norm, class_src)?;
    let pushforward = (method != H0Method::Lattice).then(|| h0_scroll(x, &c));
    let lattice = match method {
        H0Method::Pushforward => None,
        _ => Some(lattice_count(x, &c)?),
    };
    let agree = match (&pushforward, &lattice) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let method_name = match method {
        H0Method::Pushforward => "pushforward",
        H0Method::Lattice => "lattice",
        H0Method::Both => "both",
    };
    let mut inputs = serde_json::to_value(VarietyInputs::new(src, &norm)).unwrap();
    inputs["class"] = json!(class_src);
    inputs["method"] = json!(method_name);
    let results = json!({
        "class": c.to_string(),
        "pushforward": pushforward.as_ref().map(dec),
        "lattice": lattice.as_ref().map(dec),
        "agree": agree,
    });
    Ok(Outcome {
        document: OutputDocument::new("h0", inputs, results),
        exit: if agree == Some(false) {
            Exit::CrossCheck
        } else {
            Exit::Success
        },
        text: None,
    })
}

pub fn members(src: &str, class_src: &str) -> Result<Outcome, CliError> {
    let norm = variety(src)?;
    let x = &norm.scroll;
    let c = class(&norm, class_src)?;
    let summary = monomial_summary(x, &c);
    let status = member_status(x, &c);
    let obstruction = snc_obstruction(x, &c);
    let mut inputs = serde_json::to_value(VarietyInputs::new(src, &norm)).unwrap();
    inputs["class"] = json!(class_src);
    let results = json!({
        "class": c.to_string(),
        "sections": dec(&summary.count),
        "forced_multiplicities": summary.forced_multiplicities.iter().map(dec).collect::<Vec<_>>(),
        "residual_class": summary.residual_class.to_string(),
        "members": StatusPayload::from(&status),
        "snc_obstruction": obstruction.as_ref().map(ObstructionPayload::from),
    });
    let exit = if summary.count == BigUint::ZERO {
        Exit::Negative
    } else {
        Exit::Success
    };
    Ok(Outcome {
        document: OutputDocument::new("members", inputs, results),
        exit,
        text: None,
    })
}

pub fn check(src: &str, boundary_src: &str) -> Result<Outcome, CliError> {
    let norm = variety(src)?;
    let raw = parse_boundary(boundary_src).map_err(CliError::input(boundary_src))?;
    let specs = raw
        .iter()
        .map(|r| BoundarySpec::from_raw(r, &norm))
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::input(boundary_src))?;
    let pair =
        LogFanoPair::new(norm.scroll.clone(), specs).map_err(CliError::input(boundary_src))?;
    let report = check_pair(&pair).map_err(CliError::input(boundary_src))?;

    let mut adjunction = Vec::new();
    for (i, part) in pair.boundary().iter().enumerate() {
        if matches!(part, BoundarySpec::SubBundle(_)) {
            let holds =
                conductor_adjunction_check(&pair, i).map_err(CliError::input(boundary_src))?;
            adjunction.push(json!({ "component": component(part), "holds": holds }));
        }
    }
    let broken = adjunction.iter().any(|a| a["holds"] == json!(false));

    let mut inputs = serde_json::to_value(VarietyInputs::new(src, &norm)).unwrap();
    inputs["boundary"] = json!(boundary_src);
    let mut results = json!({
        "boundary": pair.boundary().iter().map(component).collect::<Vec<_>>(),
        "boundary_class": pair.boundary_class().to_string(),
    });
    let pair_payload = serde_json::to_value(PairPayload::from(&report)).unwrap();
    for (k, v) in pair_payload.as_object().unwrap() {
        results[k] = v.clone();
    }
    results["adjunction"] = json!(adjunction);

    let exit = if broken {
        Exit::CrossCheck
    } else if report.is_log_fano {
        Exit::Success
    } else {
        Exit::Negative
    };
    Ok(Outcome {
        document: OutputDocument::new("check", inputs, results),
        exit,
        text: None,
    })
}

pub fn gallery(r: u32, max_twist: i64) -> Result<Outcome, CliError> {
    if r < 2 {
        return Err(CliError::Usage(format!("--r must be at least 2, got {r}")));
    }
    if max_twist < 0 {
        return Err(CliError::Usage(format!(
            "--max-twist must be nonnegative, got {max_twist}"
        )));
    }
    let mut instances = Vec::new();
    for id in FamilyId::ALL {
        for params in id.params_up_to(r, max_twist) {
            let inst = family(id, params).map_err(|e| CliError::Usage(e.to_string()))?;
            instances.push(verify_family(&inst));
        }
    }
    let failed = instances.iter().filter(|i| !i.pass()).count();
    let results = json!({
        "instances": instances.iter().map(InstancePayload::from).collect::<Vec<_>>(),
        "passed": dec(instances.len() - failed),
        "failed": dec(failed),
    });
    Ok(Outcome {
        document: OutputDocument::new(
            "gallery",
            json!({ "r": dec(r), "max_twist": dec(max_twist) }),
            results,
        ),
        exit: if failed > 0 {
            Exit::CrossCheck
        } else {
            Exit::Success
        },
        text: None,
    })
}

pub fn census(
    query: &CensusQuery,
    format: Format,
    threads: Option<usize>,
) -> Result<Outcome, CliError> {
    let rows = parallel_census(query, threads)?;
    let report = match_table(&rows, query);
    let (mode, threshold) = match query.mode {
        CensusMode::IndexAtLeast(k) => ("index", k),
        CensusMode::PseudoindexAtLeast(k) => ("pseudoindex", k),
    };
    let inputs = json!({
        "n": dec(query.n),
        "mode": mode,
        "threshold": dec(threshold),
        "max_twist": dec(query.twist_cap),
        "require_reduced_member": query.require_reduced_member,
        "apply_filters": query.apply_filters,
    });
    let results = json!({
        "rows": rows.iter().enumerate().map(|(k, r)| RowPayload::new(k + 1, r)).collect::<Vec<_>>(),
        "match": MatchPayload::from(&report),
    });
    let text = (format == Format::Markdown).then(|| markdown::census_table(query, &rows, &report));
    Ok(Outcome {
        document: OutputDocument::new("census", inputs, results),
        exit: if report.is_exact() {
            Exit::Success
        } else {
            Exit::CrossCheck
        },
        text,
    })
}
