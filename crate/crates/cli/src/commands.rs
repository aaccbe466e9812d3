use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use skewlagrange::bounded::generalized_lagrange;
use skewlagrange::ideal::{first_dependent, minimal_poly};
use skewlagrange::one_sided::{
    consistency_reduce, extend_in_class, solve_one_sided, InterpolationFamily, OneSidedProblem,
    Reduction,
};
use skewlagrange::oracle::{decode_poly, oracle_interpolate};
use skewlagrange::problem::{Problem, ProblemFile};
use skewlagrange::random::Generator;
use skewlagrange::sylvester::{canonical_solution, solve_sylvester, SylvesterStatus};
use skewlagrange::two_sided::{
    solve_two_sided, within_class_redundancy, TwoSidedOutcome, TwoSidedProblem,
};
use skewlagrange::{DivisionRing, Error, Quaternion, Side, SkewPoly};

use crate::report::{json, Forced, Report, Witness};
use crate::{Format, Mode, Outcome};

type Q = Quaternion;
type P = SkewPoly<Q>;
type CmdResult = Result<Outcome, String>;

fn load(path: &Path) -> Result<Problem, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    text.parse::<Problem>()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_element(text: &str, what: &str) -> Result<Q, String> {
    text.parse().map_err(|e| format!("{what} {text:?}: {e}"))
}

fn parse_nodes(texts: &[String]) -> Result<Vec<Q>, String> {
    texts
        .iter()
        .enumerate()
        .map(|(i, t)| parse_element(t, &format!("node {i}")))
        .collect()
}

fn hint(e: Error) -> String {
    match e {
        Error::Dependent { .. } | Error::DuplicateNode { .. } => format!("{e} (run with --reduce)"),
        other => other.to_string(),
    }
}

fn emit(text: String) {
    print!("{text}");
}

/// Conditions kept after an optional reduction, with positions in the input.
struct Selected {
    problem: TwoSidedProblem<Q>,
    left_map: Vec<usize>,
    right_map: Vec<usize>,
    dropped: Vec<Forced>,
}

fn reduce_side(conds: &[(Q, Q)], side: Side) -> Result<(Vec<usize>, Vec<Forced>), Witness> {
    if conds.is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    let p = OneSidedProblem::new(side, conds.to_vec()).expect("nodes already validated");
    match consistency_reduce(&p) {
        Reduction::Inconsistent { witness } => Err(Witness {
            left: (side == Side::Left).then_some(witness),
            right: (side == Side::Right).then_some(witness),
            message: format!("{side} condition {witness} contradicts the P-basis of its class"),
        }),
        Reduction::Reduced { basis_indices, .. } => {
            let dropped = (0..conds.len())
                .filter(|i| !basis_indices.contains(i))
                .map(|i| Forced {
                    side,
                    index: i,
                    node: conds[i].0.to_string(),
                    forced: conds[i].1.to_string(),
                    prescribed: conds[i].1.to_string(),
                    consistent: true,
                })
                .collect();
            Ok((basis_indices, dropped))
        }
    }
}

fn select(p: &TwoSidedProblem<Q>, reduce: bool) -> Result<Selected, Witness> {
    if !reduce {
        return Ok(Selected {
            problem: p.clone(),
            left_map: (0..p.left().len()).collect(),
            right_map: (0..p.right().len()).collect(),
            dropped: Vec::new(),
        });
    }
    let (left_map, mut dropped) = reduce_side(p.left(), Side::Left)?;
    let (right_map, more) = reduce_side(p.right(), Side::Right)?;
    dropped.extend(more);
    let problem = TwoSidedProblem::new(
        left_map.iter().map(|&i| p.left()[i].clone()).collect(),
        right_map.iter().map(|&j| p.right()[j].clone()).collect(),
    )
    .expect("subset of distinct nodes");
    Ok(Selected {
        problem,
        left_map,
        right_map,
        dropped,
    })
}

fn zero_targets(p: &TwoSidedProblem<Q>) -> TwoSidedProblem<Q> {
    let z = |v: &[(Q, Q)]| v.iter().map(|(a, _)| (a.clone(), Q::zero())).collect();
    TwoSidedProblem::new(z(p.left()), z(p.right())).expect("same nodes")
}

/// Adds `M_ℓ·(e·zᵗ)·M_r` for every basis element `e` and every `t` that keeps
/// the degree below `bound`.
fn extend_to_bound(family: &mut InterpolationFamily<Q>, bound: usize) {
    let dl = family.modulus_left.as_ref().and_then(P::degree).unwrap_or(0);
    let dr = family.modulus_right.as_ref().and_then(P::degree).unwrap_or(0);
    let one = P::one();
    let ml = family.modulus_left.clone().unwrap_or_else(|| one.clone());
    let mr = family.modulus_right.clone().unwrap_or(one);
    for t in 0..bound.saturating_sub(dl + dr) {
        for e in Q::basis() {
            family
                .homogeneous_basis
                .push(ml.mul(&P::monomial(e, t)).mul(&mr));
        }
    }
}

pub fn interp(
    path: &Path,
    mode: Mode,
    reduce_flag: bool,
    degree_bound: Option<usize>,
    format: Format,
) -> CmdResult {
    let input = load(path)?;
    let p = &input.problem;
    match mode {
        Mode::Left if !p.right().is_empty() => {
            return Err("--side left needs a problem without right conditions".into())
        }
        Mode::Right if !p.left().is_empty() => {
            return Err("--side right needs a problem without left conditions".into())
        }
        _ => {}
    }
    let sel = match select(p, reduce_flag || input.reduce) {
        Ok(sel) => sel,
        Err(w) => {
            emit(Report::inconsistent(w).render(format));
            return Ok(Outcome::Inconsistent);
        }
    };
    let q = &sel.problem;
    let mut forced = sel.dropped;

    let family = match mode {
        Mode::Left | Mode::Right => {
            let side = if mode == Mode::Left { Side::Left } else { Side::Right };
            let conds = if side == Side::Left { q.left() } else { q.right() };
            let one = OneSidedProblem::new(side, conds.to_vec()).map_err(hint)?;
            if let Some(i) = first_dependent(&one.nodes(), side) {
                return Err(hint(Error::Dependent { side, index: i }));
            }
            solve_one_sided(&one).expect("independent nodes").0
        }
        Mode::Two | Mode::Generalized => {
            let outcome = if mode == Mode::Two {
                solve_two_sided(q)
            } else {
                generalized_lagrange(q)
            }
            .map_err(hint)?;
            forced.extend(within_class_redundancy(q).into_iter().map(|f| {
                let (map, conds) = match f.side {
                    Side::Left => (&sel.left_map, p.left()),
                    Side::Right => (&sel.right_map, p.right()),
                };
                let index = map[f.index];
                Forced {
                    side: f.side,
                    index,
                    node: conds[index].0.to_string(),
                    forced: f.forced.to_string(),
                    prescribed: f.prescribed.to_string(),
                    consistent: f.consistent,
                }
            }));
            match outcome {
                TwoSidedOutcome::Family(fam) => fam.into_interpolation_family(),
                TwoSidedOutcome::Inconsistent { left, right } => {
                    let (l, r) = (sel.left_map[left], sel.right_map[right]);
                    let mut report = Report::inconsistent(Witness {
                        left: Some(l),
                        right: Some(r),
                        message: format!(
                            "the Sylvester equation for left node {} and right node {} has no solution",
                            p.left()[l].0,
                            p.right()[r].0
                        ),
                    });
                    report.forced_conditions = forced;
                    emit(report.render(format));
                    return Ok(Outcome::Inconsistent);
                }
            }
        }
    };

    let (base, basis) = match degree_bound {
        Some(bound) if family.particular.degree().is_some_and(|d| d >= bound) => {
            let sol = oracle_interpolate(p.left(), p.right(), &[], bound);
            let Some(part) = sol.particular else {
                let mut report = Report::inconsistent(Witness {
                    message: format!("no solution of degree below {bound}"),
                    ..Witness::default()
                });
                report.forced_conditions = forced;
                emit(report.render(format));
                return Ok(Outcome::Inconsistent);
            };
            let basis = sol.nullspace_basis.iter().map(|v| decode_poly(v)).collect();
            (decode_poly(&part), basis)
        }
        Some(bound) => {
            let mut family = family;
            extend_to_bound(&mut family, bound);
            (family.particular, family.homogeneous_basis)
        }
        None => (family.particular, family.homogeneous_basis),
    };

    let mut members = Vec::new();
    for (t, lambdas) in input.parameters.iter().enumerate() {
        if lambdas.len() != basis.len() {
            return Err(format!(
                "options.parameters[{t}] has {} entries but the homogeneous basis has {}",
                lambdas.len(),
                basis.len()
            ));
        }
        let m = basis
            .iter()
            .zip(lambdas)
            .fold(base.clone(), |acc, (b, l)| acc.add(&b.scale_rational(l)));
        members.push(m);
    }

    let zero = zero_targets(p);
    if !p.is_satisfied_by(&base)
        || !members.iter().all(|m| p.is_satisfied_by(m))
        || !basis.iter().all(|h| zero.is_satisfied_by(h))
    {
        return Err("internal error: the computed solution failed verification".into());
    }

    let mut report = Report::solved(&base);
    report.homogeneous_basis = basis.iter().map(ToString::to_string).collect();
    report.forced_conditions = forced;
    report.members = members.iter().map(ToString::to_string).collect();
    emit(report.render(format));
    Ok(Outcome::Solved)
}

fn central_or_plain(f: &P) -> String {
    match f.to_central() {
        Some(c) => c.to_string(),
        None => f.to_string(),
    }
}

#[derive(Serialize)]
struct MinpolyReport {
    polynomial: String,
    degree: usize,
    basis: Vec<usize>,
}

pub fn minpoly(nodes: &[String], side: Side, format: Format) -> CmdResult {
    let nodes = parse_nodes(nodes)?;
    let m = minimal_poly(&nodes, side);
    let report = MinpolyReport {
        polynomial: central_or_plain(&m.poly),
        degree: m.poly.degree().unwrap_or(0),
        basis: m.basis_indices,
    };
    emit(match format {
        Format::Json => json(&report),
        Format::Text => {
            let basis: Vec<String> = report
                .basis
                .iter()
                .map(|&i| format!("{i} ({})", nodes[i]))
                .collect();
            format!("{}\nP-basis: {}\n", report.polynomial, basis.join(", "))
        }
    });
    Ok(Outcome::Solved)
}

#[derive(Serialize)]
struct IndependenceReport {
    independent: bool,
    first_dependent: Option<usize>,
}

pub fn independent(nodes: &[String], side: Side, format: Format) -> CmdResult {
    let nodes = parse_nodes(nodes)?;
    let dep = first_dependent(&nodes, side);
    let report = IndependenceReport {
        independent: dep.is_none(),
        first_dependent: dep,
    };
    emit(match (format, dep) {
        (Format::Json, _) => json(&report),
        (Format::Text, None) => format!("{side} P-independent\n"),
        (Format::Text, Some(i)) => format!(
            "{side} P-dependent: node {i} ({}) is a {side} zero of the minimal polynomial of the others\n",
            nodes[i]
        ),
    });
    Ok(Outcome::Solved)
}

#[derive(Serialize)]
struct SylvesterReport {
    status: SylvesterStatus,
    particular: Option<String>,
    basis: Vec<String>,
}

pub fn sylvester(a: &str, b: &str, g: &str, format: Format) -> CmdResult {
    let (a, b, g) = (
        parse_element(a, "a")?,
        parse_element(b, "b")?,
        parse_element(g, "g")?,
    );
    let s = canonical_solution(&solve_sylvester(&a, &b, &g));
    let report = SylvesterReport {
        status: s.status,
        particular: s.particular.as_ref().map(ToString::to_string),
        basis: s.basis.iter().map(ToString::to_string).collect(),
    };
    emit(match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut out = String::new();
            let status = match s.status {
                SylvesterStatus::Unique => "unique",
                SylvesterStatus::Affine => "affine",
                SylvesterStatus::Unsolvable => "unsolvable",
            };
            let _ = writeln!(out, "status: {status}");
            if let Some(x) = &report.particular {
                let _ = writeln!(out, "particular: {x}");
            }
            if !report.basis.is_empty() {
                let _ = writeln!(out, "basis: {}", report.basis.join(", "));
            }
            out
        }
    });
    Ok(if s.is_solvable() {
        Outcome::Solved
    } else {
        Outcome::Inconsistent
    })
}

pub fn extend(path: &Path, target: &str, side: Option<Side>, format: Format) -> CmdResult {
    let input = load(path)?;
    let p = &input.problem;
    let (basis_side, conds) = match (p.left().is_empty(), p.right().is_empty()) {
        (false, true) => (Side::Left, p.left()),
        (true, false) => (Side::Right, p.right()),
        _ => return Err("extend needs conditions on exactly one side".into()),
    };
    let target = parse_element(target, "target")?;
    let side = side.unwrap_or(basis_side);
    let basis = OneSidedProblem::new(basis_side, conds.to_vec()).map_err(hint)?;
    let value = extend_in_class(&basis, &target, side).map_err(|e| e.to_string())?;
    emit(match format {
        Format::Json => json(&serde_json::json!({
            "side": side,
            "target": target.to_string(),
            "value": value.to_string(),
        })),
        Format::Text => format!("{value}\n"),
    });
    Ok(Outcome::Solved)
}

#[derive(Serialize)]
struct Residual {
    side: Side,
    index: usize,
    node: String,
    value: String,
    residual: String,
    ok: bool,
}

pub fn verify(poly: &str, path: &Path, format: Format) -> CmdResult {
    let f: P = poly.parse().map_err(|e| format!("polynomial: {e}"))?;
    let input = load(path)?;
    let p = &input.problem;
    let (left, right) = p.residuals(&f);
    let mut rows = Vec::new();
    for (side, conds, res) in [(Side::Left, p.left(), left), (Side::Right, p.right(), right)] {
        for (index, ((node, _), r)) in conds.iter().zip(res).enumerate() {
            let value = f.eval(node, side);
            rows.push(Residual {
                side,
                index,
                node: node.to_string(),
                value: value.to_string(),
                ok: r.is_zero(),
                residual: r.to_string(),
            });
        }
    }
    let failed = rows.iter().filter(|r| !r.ok).count();
    emit(match format {
        Format::Json => json(&serde_json::json!({
            "status": if failed == 0 { "pass" } else { "fail" },
            "residuals": rows,
        })),
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{}[{}] at {}: value {}, residual {} {}",
                    r.side,
                    r.index,
                    r.node,
                    r.value,
                    r.residual,
                    if r.ok { "ok" } else { "FAIL" }
                );
            }
            if failed == 0 {
                let _ = writeln!(out, "pass: all {} conditions hold", rows.len());
            } else {
                let _ = writeln!(out, "fail: {failed} of {} conditions violated", rows.len());
            }
            out
        }
    });
    Ok(if failed == 0 {
        Outcome::Solved
    } else {
        Outcome::Inconsistent
    })
}

#[derive(Serialize)]
struct CrossCheck {
    problem: ProblemFile,
    closed_form: &'static str,
    oracle_dimension: Option<usize>,
    agree: bool,
}

fn cross_check(p: &TwoSidedProblem<Q>) -> Result<CrossCheck, String> {
    let bound = p.left().len() + p.right().len();
    let sol = oracle_interpolate(p.left(), p.right(), &[], bound);
    let (closed_form, agree) = match solve_two_sided(p).map_err(|e| e.to_string())? {
        TwoSidedOutcome::Inconsistent { .. } => ("inconsistent", sol.is_empty()),
        TwoSidedOutcome::Family(fam) => {
            let agree = sol.contains(&skewlagrange::oracle::encode_poly(&fam.base, bound))
                && sol.dimension() == Some(fam.homogeneous_basis.len());
            ("solved", agree)
        }
    };
    Ok(CrossCheck {
        problem: ProblemFile::from_problem(p),
        closed_form,
        oracle_dimension: sol.dimension(),
        agree,
    })
}

pub fn oracle(
    path: Option<&Path>,
    degree_bound: Option<usize>,
    count: usize,
    seed: u64,
    format: Format,
) -> CmdResult {
    if let Some(path) = path {
        let input = load(path)?;
        let p = &input.problem;
        let bound = degree_bound.unwrap_or(p.left().len() + p.right().len());
        let sol = oracle_interpolate(p.left(), p.right(), &[], bound);
        let Some(part) = &sol.particular else {
            emit(
                Report::inconsistent(Witness {
                    message: format!("no solution of degree below {bound}"),
                    ..Witness::default()
                })
                .render(format),
            );
            return Ok(Outcome::Inconsistent);
        };
        let mut report = Report::solved(&decode_poly(part));
        report.homogeneous_basis = sol
            .nullspace_basis
            .iter()
            .map(|v| decode_poly::<Q>(v).to_string())
            .collect();
        emit(report.render(format));
        return Ok(Outcome::Solved);
    }
    let mut g = Generator::new(seed);
    let mut checks = Vec::with_capacity(count);
    for _ in 0..count {
        let n = g.below(3);
        let k = g.below(4 - n);
        let p: TwoSidedProblem<Q> = if g.chance(0.5) {
            g.solvable_two_sided_problem(n, k)
        } else {
            g.two_sided_problem(n, k)
        };
        checks.push(cross_check(&p)?);
    }
    let disagreements = checks.iter().filter(|c| !c.agree).count();
    emit(match format {
        Format::Json => json(&serde_json::json!({
            "seed": seed,
            "instances": checks,
            "disagreements": disagreements,
        })),
        Format::Text => {
            let mut out = format!("seed {seed}\n");
            for (t, c) in checks.iter().enumerate() {
                let conds: Vec<String> = c
                    .problem
                    .left
                    .iter()
                    .map(|x| format!("L({})={}", x.node, x.value))
                    .chain(c.problem.right.iter().map(|x| format!("R({})={}", x.node, x.value)))
                    .collect();
                let _ = writeln!(
                    out,
                    "{t}: {} | closed form {}, oracle dimension {} | {}",
                    conds.join(" "),
                    c.closed_form,
                    c.oracle_dimension.map_or("-".into(), |d| d.to_string()),
                    if c.agree { "agree" } else { "DISAGREE" }
                );
            }
            out
        }
    });
    if disagreements > 0 {
        return Err(format!("{disagreements} instances disagree with the oracle"));
    }
    Ok(Outcome::Solved)
}
