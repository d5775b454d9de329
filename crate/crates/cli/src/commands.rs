use std::collections::HashSet;

use liaison_core::bdl::initial_omega;
use liaison_core::eqcoh::{
    brute_force_eqcoh, buchsbaum_count, class_has_eqcoh, construct_equal_in_last,
    construct_min_eqcoh, enumerate_eqcoh_with, search_equal_in_last,
};
use liaison_core::genbound::{
    buchsbaum_criterion, construct_max_generator, hyperplane_section, kernel_constraints,
    maxcorank_criterion, necessary_for_omega, obstruction_screens, omega_bound_curve,
    omega_bound_general, CohomologyDiameters, KernelProfile,
};
use liaison_core::integrality::{
    integral_necessary, min_eqcoh_theta, theta_coh_decision, trivial_case_check,
};
use liaison_core::{
    Chain, CurveInvariants, Degree, Execution, GeneratorDegreeInterval, Result, Verdict,
};
use serde_json::json;

use crate::input::Input;
use crate::report::{Report, Status};

const FEASIBILITY: &str =
    "a (1,f) link is taken to exist for every f ≥ α; only the numerical condition is checked";

fn interval(w: &GeneratorDegreeInterval) -> String {
    match (w.lower, w.certified_exact) {
        (_, true) => format!("ω = {} (certified)", w.upper),
        (Some(lo), false) if lo == w.upper => format!("ω = {lo}"),
        (Some(lo), false) => format!("{lo} ≤ ω ≤ {}", w.upper),
        (None, false) => format!("ω ≤ {}", w.upper),
    }
}

/// Rows `t, Δ²H, H, h¹, h²` up to the degree where everything is settled.
fn curve_table(c: &CurveInvariants) -> Vec<String> {
    let hi = c.sigma().max(c.r_o().map_or(0, |r| r + 1));
    let mut rows = vec![format!("{:>4} {:>6} {:>6} {:>5} {:>5}", "t", "Δ²H", "H", "h1", "h2")];
    for t in 0..=hi {
        rows.push(format!(
            "{:>4} {:>6} {:>6} {:>5} {:>5}",
            t,
            c.delta2().value_at(t),
            c.hilbert(t),
            c.h1_at(t),
            c.h2(t)
        ));
    }
    rows
}

fn chain_lines(chain: &Chain) -> Result<Vec<String>> {
    let mut lines = vec![format!("degrees {:?}", chain.degrees())];
    for (i, c) in chain.stages()?.iter().enumerate() {
        lines.push(format!("C{i}: Δ²H {}  h1 {}", c.delta2(), c.h1()));
    }
    Ok(lines)
}

fn chain_data(chain: &Chain) -> Result<serde_json::Value> {
    Ok(json!({
        "degrees": chain.degrees(),
        "links": chain.links,
        "stages": chain.stages()?,
    }))
}

pub fn analyze(input: &Input, rep: &mut Report) -> Result<()> {
    let cd = input.class();
    let c = &cd.minimal;
    rep.invariants = Some(c.summary());
    rep.section("hilbert data", curve_table(c), json!(null));

    if c.is_acm() {
        rep.verdicts.push(Verdict::new(
            "ACM",
            true,
            "h1 = 0; equal-cohomology questions are vacuous",
            "definition",
        ));
    } else {
        rep.verdicts.push(Verdict::new(
            "equal cohomology",
            c.equal_cohomology()?,
            format!("e = {}, r_o = {}", c.e_index(), c.r_o()?),
            "e = r_o and h1 = h2 on the module support",
        ));
        for r in 1..=c.diam() {
            rep.verdicts.push(Verdict::new(
                format!("equal cohomology in the last {r} places"),
                c.equal_in_last(r)?,
                format!("σ = {} against r_o − r + 3 = {}", c.sigma(), c.r_o()? - r + 3),
                "σ ≤ r_o − r + 3",
            ));
        }
        for r in 1..=c.diam() {
            rep.verdicts.push(Verdict::new(
                format!("class has equal cohomology in the last {r} places"),
                class_has_eqcoh(&cd, r)?,
                format!("tail of Δ²H(C0) in the last {r} places"),
                "tail non-decreasing and non-positive",
            ));
        }
    }

    let bound = omega_bound_curve(c);
    let general = omega_bound_general(&CohomologyDiameters::of_curve(c))?;
    let w = initial_omega(c);
    let mut lines = vec![
        format!("bound σ + diam = {bound}"),
        format!("general bound = {general}"),
        format!("without history: {}", interval(&w)),
    ];
    if c.diam() > 0 {
        let nec = necessary_for_omega(c, c.diam())?;
        lines.push(format!("necessary condition for ω = σ + diam met: {nec}"));
    }
    rep.section(
        "generator degree",
        lines,
        json!({ "bound": bound, "general_bound": general, "interval": w }),
    );
    Ok(())
}

pub fn construct_eqcoh(input: &Input, places: Option<i64>, rep: &mut Report) -> Result<()> {
    let cd = input.class();
    let m = match places {
        Some(r) => construct_equal_in_last(&cd, r)?,
        None => construct_min_eqcoh(&cd)?,
    };
    let w = m.chain.track_omega(initial_omega(&cd.minimal), false)?;
    rep.invariants = Some(m.result.summary());
    let mut lines = chain_lines(&m.chain)?;
    lines.push(format!(
        "height {} for equal cohomology in the last {} places (minimal: {})",
        m.height, m.places, m.certified_min_height
    ));
    lines.push(format!("generator degree: {}", interval(&w)));
    rep.section(
        "equal-cohomology construction",
        lines,
        json!({
            "chain": chain_data(&m.chain)?,
            "height": m.height,
            "places": m.places,
            "certified_min_height": m.certified_min_height,
            "result": m.result,
            "omega": w,
        }),
    );
    rep.section("resulting curve", curve_table(&m.result), json!(null));
    for n in m.notes {
        rep.warn(n);
    }
    Ok(())
}

pub fn construct_max_gen(input: &Input, rep: &mut Report) -> Result<()> {
    let cd = input.class();
    let m = construct_max_generator(&cd)?;
    rep.invariants = Some(m.result.summary());
    let mut lines = chain_lines(&m.chain)?;
    lines.push(format!("generator degree: {}", interval(&m.omega)));
    rep.section(
        "maximal generator construction",
        lines,
        json!({ "chain": chain_data(&m.chain)?, "result": m.result, "omega": m.omega }),
    );
    rep.section("resulting curve", curve_table(&m.result), json!(null));
    for n in m.notes {
        rep.warn(n);
    }
    Ok(())
}

pub fn enumerate(input: &Input, shift: usize, exec: Execution, rep: &mut Report) -> Result<()> {
    let cd = input.class();
    let level = enumerate_eqcoh_with(&cd, shift, exec)?;
    let mut lines = vec![
        level.status.clone(),
        format!("minimal height {}", level.min_height),
    ];
    for o in &level.curves {
        lines.push(format!(
            "{:?}  Δ²H {}  h1 {}",
            o.degrees,
            o.curve.delta2(),
            o.curve.h1()
        ));
    }
    rep.section(
        format!("equal-cohomology curves at shift {shift}"),
        lines,
        json!(level),
    );
    if cd.buchsbaum_dims.is_some() && shift >= level.min_height {
        let expected = buchsbaum_count(&cd, shift)?;
        let got = level.curves.len() as u64;
        rep.verdicts.push(Verdict::new(
            "count matches the Buchsbaum closed form",
            expected == got,
            format!("listed {got}, closed form {expected}"),
            "2^(shift − minimal height)",
        ));
        if expected != got {
            rep.fail(Status::Disagreement, "enumeration and closed-form count disagree");
        }
    }
    rep.warn(FEASIBILITY);
    Ok(())
}

pub fn check_integral(input: &Input, rep: &mut Report) -> Result<()> {
    let cd = input.class();
    let c0 = &cd.minimal;
    let v = integral_necessary(&cd)?;
    rep.verdicts.extend(v.conditions.iter().cloned());
    let status = serde_json::to_value(v.status).unwrap();
    rep.section(
        "integral candidate",
        vec![format!("status: {}", status.as_str().unwrap_or("?"))],
        json!({ "status": status }),
    );

    match cd.t1 {
        None => rep.warn("t1 not supplied: t(C0) < t1 assumed, θ checks skipped"),
        Some(t1) if c0.t_inv() < t1 => {
            let d = theta_coh_decision(&cd)?;
            rep.verdicts.extend(d.conditions.iter().cloned());
            let mut lines = vec![format!("connected θ with equal cohomology exists: {}", d.exists)];
            if let Some(w) = &d.witness {
                lines.push(format!("witness chain {:?}", w.chain.degrees()));
                lines.push(format!("θ = {} at height {}", w.theta.theta, w.theta.height));
                if let Some((a, b)) = w.theta.interval {
                    lines.push(format!("interval [{a}, {b}], verified: {}", w.verified));
                }
            }
            rep.section("connected θ", lines, json!(d));
        }
        Some(_) => {
            let t = trivial_case_check(&cd)?;
            rep.verdicts.push(Verdict::new(
                "trivial case",
                t.holds,
                format!(
                    "C0 has equal cohomology and t(C0) = t1; θ connected: {}",
                    t.theta_connected
                ),
                "minimal equal-cohomology curve with connected θ",
            ));
            if !t.consistent {
                rep.fail(Status::Disagreement, "trivial-case criterion and direct θ check disagree");
            }
        }
    }

    if class_has_eqcoh(&cd, c0.diam().max(1)).unwrap_or(false) {
        let th = min_eqcoh_theta(&cd)?;
        rep.section(
            "θ of the minimal equal-cohomology curve",
            vec![format!("θ = {} at height {}", th.theta, th.height)],
            json!(th),
        );
    }
    Ok(())
}

pub fn bound(input: &Input, rep: &mut Report) -> Result<()> {
    let cd = input.class();
    let c0 = &cd.minimal;
    rep.invariants = Some(c0.summary());
    let kernel = input.kernel.clone().map(KernelProfile::new);
    rep.verdicts.extend(obstruction_screens(&cd, kernel.as_ref()));

    if c0.diam() > 0 {
        let ra = c0.r_a()?;
        if c0.e_index() < ra {
            rep.verdicts.push(Verdict::new(
                "maximal corank criterion",
                maxcorank_criterion(&cd)?,
                "h1(t) ≥ 3h1(t+1) − 3h1(t+2) + h1(t+3) on the module support",
                "maximal corank classes",
            ));
        }
        if let Some(dims) = cd.buchsbaum_values() {
            rep.verdicts.push(Verdict::new(
                "Buchsbaum criterion",
                buchsbaum_criterion(dims, false)?,
                format!("dims {dims:?}: n_i ≥ 3 n_(i+1)"),
                "Buchsbaum classes",
            ));
        }
    }

    let mut lines = vec![format!("ω ≤ σ + diam = {}", omega_bound_curve(c0))];
    let mut data = json!({ "bound": omega_bound_curve(c0) });
    match construct_max_generator(&cd) {
        Ok(m) => {
            lines.push(format!(
                "attained by chain {:?}: {}",
                m.chain.degrees(),
                interval(&m.omega)
            ));
            data["attained"] = json!({ "degrees": m.chain.degrees(), "omega": m.omega });
        }
        Err(e) => lines.push(format!("construction blocked: {e}")),
    }
    if let Some(k) = &kernel {
        match hyperplane_section(c0, k) {
            Ok(z) => {
                lines.push(format!("plane section Δ¹H = {z}"));
                data["plane_section"] = json!(z);
            }
            Err(e) => rep.verdicts.push(Verdict::new(
                "kernel profile admissible",
                false,
                e.to_string(),
                "plane section of the curve",
            )),
        }
        for r in 1..=c0.diam() {
            if c0.equal_in_last(r)? {
                match kernel_constraints(c0, r, Some(k)) {
                    Ok(kc) => {
                        if let Some(b) = kc.refined_bound {
                            lines.push(format!("refined bound σ + diam K = {b}"));
                            data["refined_bound"] = json!(b);
                        }
                    }
                    Err(e) => rep.verdicts.push(Verdict::new(
                        format!("kernel conditions, last {r} places"),
                        false,
                        e.to_string(),
                        "kernel under equal cohomology",
                    )),
                }
            }
        }
    }
    rep.section("generator degree bound", lines, data);
    Ok(())
}

pub fn oracle(
    input: &Input,
    height: usize,
    cap: Degree,
    exec: Execution,
    rep: &mut Report,
) -> Result<()> {
    let cd = input.class();
    let c0 = &cd.minimal;
    if c0.is_acm() {
        rep.warn("ACM class: nothing to compare");
        return Ok(());
    }
    let mut disagreements = Vec::new();
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    for r in 1..=c0.diam() {
        let theorem = class_has_eqcoh(&cd, r)?;
        let found = search_equal_in_last(c0, r, height, cap, exec)?;
        let needed = construct_equal_in_last(&cd, r)
            .ok()
            .map(|m| (m.height, m.chain.degrees().into_iter().max().unwrap_or(0)));
        let verdict = match (&found, needed) {
            (Some(_), None) => "disagree: the search reached a curve the criterion rules out",
            (Some(o), Some((h, _))) if o.degrees.len() < h => {
                "disagree: the search beat the certified minimal height"
            }
            (Some(_), Some(_)) => "agree",
            (None, None) => "agree",
            (None, Some((h, d))) if h <= height && d <= cap => {
                "disagree: the construction lies within the search bounds but was not found"
            }
            (None, Some(_)) => "inconclusive: construction lies beyond the search bounds",
        };
        if verdict.starts_with("disagree") {
            disagreements.push(format!("r = {r}: {verdict}"));
        }
        lines.push(format!(
            "r = {r}: criterion {theorem}, search {}, {verdict}",
            found
                .as_ref()
                .map_or("none".to_string(), |o| format!("{:?}", o.degrees))
        ));
        rows.push(json!({
            "places": r,
            "criterion": theorem,
            "found": found.as_ref().map(|o| &o.degrees),
            "verdict": verdict,
        }));
    }

    if let Ok(min) = construct_min_eqcoh(&cd) {
        for shift in min.height..=height {
            let listed = enumerate_eqcoh_with(&cd, shift, exec)?;
            let brute = brute_force_eqcoh(c0, shift, cap, exec)?;
            let listed_set: HashSet<_> = listed.curves.iter().map(|o| &o.curve).collect();
            let brute_set: HashSet<_> = brute.iter().map(|o| &o.curve).collect();
            let within = listed
                .curves
                .iter()
                .all(|o| o.degrees.iter().all(|&d| d <= cap));
            let ok = brute_set.is_subset(&listed_set) && (!within || brute_set == listed_set);
            let verdict = if ok { "agree" } else { "disagree" };
            if !ok {
                disagreements.push(format!("shift {shift}: listing and exhaustive search differ"));
            }
            lines.push(format!(
                "shift {shift}: listed {}, exhaustive {}, {verdict}",
                listed_set.len(),
                brute_set.len()
            ));
            rows.push(json!({
                "shift": shift,
                "listed": listed_set.len(),
                "exhaustive": brute_set.len(),
                "verdict": verdict,
            }));
        }
    }

    let agree = disagreements.is_empty();
    rep.verdicts.push(Verdict::new(
        "theorem and oracle agree",
        agree,
        if agree {
            format!("height ≤ {height}, degrees ≤ {cap}")
        } else {
            disagreements.join("; ")
        },
        "exhaustive chain search",
    ));
    rep.section("oracle", lines, json!(rows));
    rep.warn(FEASIBILITY);
    if !agree {
        rep.fail(Status::Disagreement, disagreements.join("; "));
    }
    Ok(())
}
