use disc_census::census::{
    count_by_squarefree_class, distinct_disc_count, eisenstein_family_distinctness, max_class_multiplicity,
    pell_count, quadratic_field_count, quadratic_field_count_by_disc, small_disc_mass, trinomial_count, HeightBox,
    KeyKind, QuadraticFieldCount, TrinomialBox,
};
use disc_census::ffpoly::{
    box_charsum, charsum_disc_total, exceptional_set_count, ff_transform_disc_check, jacobi_charsum, mixed_charsum,
    mixed_charsum_sweep, ExactCharSum, LambdaVector,
};
use disc_census::fielddisc::{field_disc, monogenic_density};
use disc_census::irreducibility::count_irreducible;
use disc_census::sieve::{make_window, optimal_z, sieve_identity_check, sieve_upper_bound, SieveLabel};
use disc_census::{Budget, MonicIntPoly};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::{CensusMode, CharsumMode, Cli, Command, GroupBy, SieveMode, TrinomialMode};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::lmfdb::{cache_dir_from_env, lookup};
use crate::output::{big, write_csv, write_json};
use crate::verify::{verify_reference_vectors, DEGREE_8};

fn need<T: Clone>(value: &Option<T>, flag: &str, mode: &str) -> CliResult<T> {
    value
        .clone()
        .ok_or_else(|| CliError::Usage(format!("--{flag} is required for {mode}")))
}

fn parse_list(text: &str) -> CliResult<Vec<u64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("cannot parse frequency list {text:?}")))
        })
        .collect()
}

fn charsum_json(s: &ExactCharSum) -> Value {
    json!({ "modulus": s.modulus, "counts": s.counts, "abs": s.abs(), "exact_zero": s.is_exact_zero() })
}

fn fields_json(q: &QuadraticFieldCount) -> Value {
    json!({
        "irreducible_pairs": q.irreducible_pairs,
        "distinct_fields": q.distinct(),
        "rational_class": q.rational_class,
        "classes": q.classes.iter().map(big).collect::<Vec<_>>(),
    })
}

pub fn dispatch(cli: &Cli) -> CliResult<i32> {
    let config = RunConfig::from_cli(cli);
    let out = cli.common.out.as_deref();
    let budget = Budget(cli.common.budget);
    let json_out = |result: Value| write_json(out, &config, result).map(|_| 0);

    match &cli.command {
        Command::Census { n, height, group_by, mode, bound } => {
            let (n, h) = (*n, *height);
            let key = match group_by {
                GroupBy::Squarefree => KeyKind::SignedSquarefreeU,
                GroupBy::AbsSquarefree => KeyKind::AbsoluteU,
                GroupBy::Disc => KeyKind::DiscValue,
            };
            match mode {
                CensusMode::Table => {
                    let table = count_by_squarefree_class(&HeightBox::strict(n, h)?, key, budget)?;
                    let column = match group_by {
                        GroupBy::Squarefree => "u",
                        GroupBy::AbsSquarefree => "abs_u",
                        GroupBy::Disc => "disc",
                    };
                    let rows: Vec<Vec<String>> = table
                        .counts
                        .iter()
                        .map(|(k, c)| vec![k.to_string(), c.to_string()])
                        .collect();
                    write_csv(out, &config, &[column, "count"], &rows)?;
                    Ok(0)
                }
                CensusMode::MaxClass => {
                    let m = max_class_multiplicity(n, h, budget)?;
                    json_out(json!({
                        "abs_u": big(&m.u),
                        "count": m.count,
                        "square_condition_fails": m.square_condition_fails,
                        "flagged_classes": m.flagged_classes.iter()
                            .map(|(u, c)| json!({"abs_u": big(u), "count": c})).collect::<Vec<_>>(),
                        "h_pow_2_5": (h as f64).powf(2.5),
                    }))
                }
                CensusMode::SmallDisc => {
                    let d = need(bound, "bound", "--mode small-disc")?;
                    let m = small_disc_mass(n, h, &d, budget)?;
                    json_out(json!({
                        "bound": big(&m.d),
                        "certified": m.certified,
                        "unresolved": m.unresolved,
                        "groups": m.groups.iter()
                            .map(|(delta, c)| json!({"field_disc": big(delta), "count": c})).collect::<Vec<_>>(),
                    }))
                }
                CensusMode::Distinct => {
                    let k = distinct_disc_count(n, h, key, budget)?;
                    json_out(json!({ "group_by": group_by, "distinct": k }))
                }
                CensusMode::Density => {
                    let m = monogenic_density(n, h, budget)?;
                    json_out(json!({
                        "irreducible": m.irreducible,
                        "certified": m.certified,
                        "fraction": m.fraction.to_string(),
                        "estimate": m.estimate(),
                        "conjectured_limit": 6.0 / std::f64::consts::PI.powi(2),
                    }))
                }
                CensusMode::Irreducible => {
                    let c = count_irreducible(n, h, budget)?;
                    json_out(json!({
                        "irreducible": c.irreducible,
                        "lattice_points": c.lattice_points,
                        "main_term": c.main_term,
                        "ratio_to_main_term": c.ratio_to_main_term(),
                        "ratio_to_lattice_points": c.ratio_to_lattice_points(),
                    }))
                }
            }
        }

        Command::Trinomial { n, a_len, b_len, a_start, b_start, s, disc_bound, height, mode } => {
            let bx = TrinomialBox::new(*a_len, *b_len, *a_start, *b_start);
            match mode {
                TrinomialMode::Count => {
                    let s = need(s, "s", "--mode count")?;
                    let t = trinomial_count(*n, &bx, &s, budget)?;
                    json_out(json!({
                        "s": big(&t.s),
                        "count": t.count,
                        "max_per_a": t.max_per_a,
                        "per_a": t.per_a.iter().map(|(a, c)| json!({"a": a, "count": c})).collect::<Vec<_>>(),
                    }))
                }
                TrinomialMode::Fields => json_out(fields_json(&quadratic_field_count(*n, &bx, budget)?)),
                TrinomialMode::FieldsByDisc => {
                    let d = need(disc_bound, "disc-bound", "--mode fields-by-disc")?;
                    let q = quadratic_field_count_by_disc(*n, &d, budget)?;
                    let mut v = fields_json(&q);
                    v["disc_bound"] = big(&d);
                    json_out(v)
                }
                TrinomialMode::Family => {
                    let h = need(height, "height", "--mode family")?;
                    let r = eisenstein_family_distinctness(*n, h)?;
                    json_out(json!({
                        "pairs": r.pairs,
                        "distinct": r.distinct,
                        "all_distinct": r.all_distinct(),
                        "all_eisenstein": r.all_eisenstein,
                    }))
                }
            }
        }

        Command::Charsum { p, n, q, lambda, height, constant, mode } => {
            let (p, n) = (*p, *n);
            match mode {
                CharsumMode::Total => json_out(json!({ "total": charsum_disc_total(p, n, budget)? })),
                CharsumMode::Mixed => {
                    let lam = parse_list(&need(lambda, "lambda", "--mode mixed")?)?;
                    let s = mixed_charsum(p, n, &LambdaVector::new(p, lam), budget)?;
                    let c = constant.unwrap_or(16.0);
                    let ratio = s.abs() / (p as f64).powi(n as i32 - 1);
                    let mut v = charsum_json(&s);
                    v["ratio"] = json!(ratio);
                    v["constant"] = json!(c);
                    v["within_constant"] = json!(ratio <= c);
                    json_out(v)
                }
                CharsumMode::Sweep => {
                    let r = mixed_charsum_sweep(p, n, budget)?;
                    let c = constant.unwrap_or(16.0);
                    json_out(json!({
                        "max_ratio": r.max_ratio,
                        "argmax": r.argmax,
                        "zero_frequency_vanishes": r.zero_frequency_vanishes,
                        "constant": c,
                        "within_constant": r.max_ratio <= c,
                    }))
                }
                CharsumMode::Jacobi => {
                    let q = need(q, "q", "--mode jacobi")?;
                    let lam = parse_list(&need(lambda, "lambda", "--mode jacobi")?)?;
                    let j = jacobi_charsum(p, q, n, &lam, budget)?;
                    json_out(json!({
                        "m": j.m,
                        "direct": charsum_json(&j.direct),
                        "crt": charsum_json(&j.crt),
                        "agree": j.direct == j.crt,
                    }))
                }
                CharsumMode::Box => {
                    let q = need(q, "q", "--mode box")?;
                    let h = need(height, "height", "--mode box")?;
                    let b = box_charsum(p, q, n, h, budget)?;
                    json_out(json!({
                        "m": b.m,
                        "height": b.h,
                        "polynomials": b.polynomials,
                        "sum": b.sum,
                        "bound": b.bound,
                    }))
                }
                CharsumMode::Transform => json_out(json!({ "holds": ff_transform_disc_check(p, n, budget)? })),
                CharsumMode::Exceptional => {
                    let r = exceptional_set_count(p, n, constant.unwrap_or(8.0), budget)?;
                    json_out(json!({
                        "count": r.count,
                        "constant": r.constant,
                        "bound": r.bound,
                        "within_bound": r.within_bound,
                    }))
                }
            }
        }

        Command::Sieve { n, height, u, z, poly, mode } => match mode {
            SieveMode::Window => {
                let w = make_window(need(z, "z", "--mode window")?)?;
                json_out(json!({ "z": w.z, "pi_count": w.pi_count, "primes": w.primes }))
            }
            SieveMode::OptimalZ => {
                let n = need(n, "n", "--mode optimal-z")?;
                let h = need(height, "height", "--mode optimal-z")?;
                json_out(json!({ "z": optimal_z(n, h as f64)? }))
            }
            SieveMode::Identity => {
                let f = MonicIntPoly::parse_highest_first(&need(poly, "poly", "--mode identity")?)?;
                let w = make_window(need(z, "z", "--mode identity")?)?;
                let r = sieve_identity_check(&f, &w)?;
                json_out(json!({ "lhs": r.lhs, "rhs": r.rhs, "equal": r.equal, "pi_count": w.pi_count }))
            }
            SieveMode::Bound => {
                let n = need(n, "n", "--mode bound")?;
                let h = need(height, "height", "--mode bound")?;
                let u = need(u, "u", "--mode bound")?;
                let z = match z {
                    Some(z) => *z,
                    None => optimal_z(n, h as f64)?,
                };
                let b = sieve_upper_bound(n, h, &u, z, budget)?;
                if b.label == SieveLabel::Estimate {
                    eprintln!(
                        "warning kind=condition-failed msg=window too small for the class; value reported as estimate"
                    );
                }
                json_out(json!({
                    "u": big(&b.u),
                    "z": z,
                    "pi_count": b.window.pi_count,
                    "sum_of_squares": b.sum_of_squares.to_string(),
                    "value": b.value,
                    "label": b.label,
                    "class_size": b.class_size,
                    "max_window_omega": b.max_window_omega,
                }))
            }
        },

        Command::Fielddisc { poly } => {
            let f = MonicIntPoly::parse_highest_first(poly)?;
            let r = field_disc(&f)?;
            json_out(json!({
                "polynomial": f.to_string(),
                "disc": big(&r.disc),
                "tested_primes": r.tested_primes.iter()
                    .map(|(p, v)| json!({"p": p.to_string(), "verdict": v})).collect::<Vec<_>>(),
                "certified_field_disc": r.certified_field_disc.as_ref().map(big),
                "sf_part_of_field_disc": { "u": big(&r.sf_part_of_field_disc.u), "v": r.sf_part_of_field_disc.v.to_string() },
                "index": r.index.as_ref().map(|i| i.to_string()),
            }))
        }

        Command::Pell { s, m, rhs, bound } => {
            let r = pell_count(s, m, rhs, *bound, budget)?;
            json_out(json!({
                "count": r.count,
                "second_route": r.second_route.map(|(route, k)| json!({"route": route, "count": k})),
            }))
        }

        Command::Verify { slow } => {
            let results = verify_reference_vectors(*slow);
            let mut text = String::new();
            for r in &results {
                text.push_str(&format!("{} {} {}\n", r.status(), r.id, r.detail));
            }
            match out {
                Some(path) => std::fs::write(path, &text)?,
                None => print!("{text}"),
            }
            Ok(if results.iter().any(|r| r.passed == Some(false)) { 1 } else { 0 })
        }

        Command::Lmfdb { label, offline } => {
            let r = lookup(label, *offline, cache_dir_from_env().as_deref())?;
            let signed = BigInt::from(r.disc_sign) * &r.disc_abs;
            let mut result = json!({
                "label": r.label,
                "degree": r.degree,
                "disc_abs": big(&r.disc_abs),
                "disc_sign": r.disc_sign,
                "source": r.source,
            });
            if r.label == "8.0.16777216.2" {
                let poly = MonicIntPoly::parse_highest_first(DEGREE_8)?;
                let d = poly.discriminant();
                let ratio_square = (&d % &signed) == BigInt::from(0)
                    && disc_census::intarith::is_perfect_square(&(&d / &signed)).is_some();
                result["local_comparison"] = json!({
                    "polynomial": poly.to_string(),
                    "poly_disc": big(&d),
                    "poly_disc_over_field_disc_is_square": ratio_square,
                });
            }
            json_out(result)
        }
    }
}
