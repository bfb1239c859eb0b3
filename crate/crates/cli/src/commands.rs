use std::path::Path;

use catpow::groups::parse::{parse_gset, parse_permutation};
use catpow::groups::Elem;
use catpow::koszul::{
    exactness_report, reciprocity_check, verify_homotopy_identity_with, DimensionReading, SymbolConvention,
    MAX_EXACTNESS_DEGREE, MAX_HOMOTOPY_DEGREE,
};
use catpow::partitions::{
    count_p_regular, enumerate_odd_parts, enumerate_p_regular, enumerate_partitions, enumerate_strict, Partition,
};
use catpow::power_ops::{
    burnside_oracle_ext, burnside_oracle_sym, ext_character_series, sym_character_series, PowerError,
    MAX_ORACLE_POWER,
};
use catpow::schur_cocycle::{
    classify_classes, cocycle as cocycle_table, count_regular_classes, irreducible_counts, rewriting_cocycle, square_move_parity_check,
    RegularityMode, MAX_REWRITING_DEGREE, MAX_TABLE_DEGREE,
};
use catpow::super_k::{clifford_k, ext_k_dim, sym_k_dim, MAX_KDIM_DEGREE};
use catpow::two_reps::{cocycle_two_character_table, perm_two_character_table, sign_two_rep, PermTwoRep};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{ConventionArg, KdimKind, ModeArg, PartitionKind, PowerKind, Report, UsageError};

fn check_range(name: &str, value: usize, lo: usize, hi: usize) -> Result<(), UsageError> {
    if value < lo || value > hi {
        return Err(UsageError(format!("--{name} must lie in {lo}..={hi}, got {value}")));
    }
    Ok(())
}

fn kv_rows(pairs: &[(&str, String)]) -> Vec<Vec<String>> {
    pairs.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect()
}

fn verify_cocycle(n: usize, samples: usize, seed: u64) -> Result<(bool, Value), UsageError> {
    let table = cocycle_table(n)?;
    if n <= MAX_REWRITING_DEGREE {
        let failure = table.first_cocycle_failure();
        let rewriting_agrees = rewriting_cocycle(n)?.values() == table.values();
        let mut parity_ok = true;
        for sigma in table.group().labels() {
            parity_ok &= square_move_parity_check(sigma)?;
        }
        let ok = failure.is_none() && rewriting_agrees && parity_ok;
        Ok((
            ok,
            json!({
                "method": "exhaustive",
                "triples": (table.group().order() as u64).pow(3).to_string(),
                "first_failure": failure,
                "rewriting_table_agrees": rewriting_agrees,
                "square_move_parity": parity_ok,
            }),
        ))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let failure = table.sampled_cocycle_failure(&mut rng, samples);
        Ok((
            failure.is_none(),
            json!({ "method": "sampled", "samples": samples, "seed": seed, "first_failure": failure }),
        ))
    }
}

pub fn cocycle(n: usize, verify: bool, samples: usize, seed: u64) -> Result<Report, UsageError> {
    check_range("n", n, 1, MAX_TABLE_DEGREE)?;
    let table = cocycle_table(n)?;
    let minus = table.values().iter().filter(|&&v| v == -1).count();
    let mut pairs = vec![
        ("n", n.to_string()),
        ("order", table.group().order().to_string()),
        ("entries", table.values().len().to_string()),
        ("minus_one_entries", minus.to_string()),
        ("normalized", table.is_normalized().to_string()),
    ];
    let mut json = json!({
        "n": n,
        "order": table.group().order(),
        "entries": table.values().len().to_string(),
        "minus_one_entries": minus.to_string(),
        "normalized": table.is_normalized(),
    });
    let mut ok = table.is_normalized();
    if verify {
        let (passed, detail) = verify_cocycle(n, samples, seed)?;
        ok &= passed;
        pairs.push(("cocycle_identity", passed.to_string()));
        json["verification"] = detail;
        json["verification"]["passed"] = json!(passed);
    }
    Ok(Report { json, header: vec!["key", "value"], rows: kv_rows(&pairs), ok })
}

fn mode(m: ModeArg) -> RegularityMode {
    match m {
        ModeArg::Criterion => RegularityMode::Criterion,
        ModeArg::Brute => RegularityMode::Brute,
    }
}

pub fn regular_classes(n: usize, m: ModeArg) -> Result<Report, UsageError> {
    let m = mode(m);
    let classes = classify_classes(n, m)?;
    let (raw_even, raw_odd) = count_regular_classes(n, m)?;
    let (irr_even, irr_odd) = irreducible_counts(n, m)?;
    let rows = classes
        .iter()
        .map(|c| vec![c.cycle_type.to_string(), format!("{:?}", c.parity).to_lowercase(), c.regular.to_string()])
        .collect();
    let json = json!({
        "n": n,
        "mode": m,
        "classes": classes.iter().map(|c| json!({
            "cycle_type": c.cycle_type.to_string(),
            "parity": c.parity,
            "regular": c.regular,
        })).collect::<Vec<_>>(),
        "regular_classes": { "even": raw_even, "odd": raw_odd },
        "irreducible_counts": { "even": irr_even, "odd": irr_odd },
    });
    Ok(Report { json, header: vec!["cycle_type", "parity", "regular"], rows, ok: true })
}

pub fn kdim(kind: KdimKind, n: usize) -> Result<Report, UsageError> {
    check_range("n", n, 0, MAX_KDIM_DEGREE)?;
    match kind {
        KdimKind::Sym | KdimKind::Ext => {
            let mut rows = Vec::new();
            let mut entries = Vec::new();
            for m in 0..=n {
                let k = if kind == KdimKind::Sym { sym_k_dim(m)? } else { ext_k_dim(m)? };
                rows.push(vec![m.to_string(), k.d0.to_string(), k.d1.to_string(), k.sdim().to_string()]);
                entries.push(json!({ "n": m, "d0": k.d0, "d1": k.d1, "sdim": k.sdim() }));
            }
            let name = if kind == KdimKind::Sym { "sym" } else { "ext" };
            Ok(Report {
                json: json!({ "kind": name, "table": entries }),
                header: vec!["n", "d0", "d1", "sdim"],
                rows,
                ok: true,
            })
        }
        KdimKind::Clifford => {
            let table: Vec<_> = (0..=n).map(clifford_k).collect();
            let rows = table
                .iter()
                .map(|k| {
                    vec![
                        k.n.to_string(),
                        k.graded_groups.clone(),
                        k.complexified.d0.to_string(),
                        k.complexified.d1.to_string(),
                        k.ungraded_rank.to_string(),
                    ]
                })
                .collect();
            Ok(Report {
                json: json!({ "kind": "clifford", "table": table }),
                header: vec!["n", "graded_groups", "d0", "d1", "ungraded_rank"],
                rows,
                ok: true,
            })
        }
    }
}

fn load_perm_rep(path: &Path) -> Result<PermTwoRep, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    Ok(PermTwoRep::new(parse_gset(&text)?))
}

pub fn two_char(rep: &str) -> Result<Report, UsageError> {
    let (name, table) = if let Some(rest) = rep.strip_prefix("sign:") {
        let n: usize = rest
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| UsageError(format!("expected sign:n=N, got {rep:?}")))?;
        check_range("rep n", n, 1, MAX_TABLE_DEGREE)?;
        (format!("sign super 2-representation of S_{n}"), cocycle_two_character_table(&sign_two_rep(n)?)?)
    } else if let Some(path) = rep.strip_prefix("perm:") {
        let rep = load_perm_rep(Path::new(path))?;
        (format!("permutation 2-representation from {path}"), perm_two_character_table(&rep)?)
    } else {
        return Err(UsageError(format!("--rep must be sign:n=N or perm:FILE, got {rep:?}")));
    };
    let rows = table
        .iter()
        .map(|e| vec![e.g.clone(), e.h.clone(), e.value.even.to_string(), e.value.odd.to_string()])
        .collect();
    Ok(Report {
        json: json!({ "representation": name, "table": table }),
        header: vec!["g", "h", "even", "odd"],
        rows,
        ok: true,
    })
}

fn element(rep: &PermTwoRep, cycles: &str) -> Result<Elem, UsageError> {
    let perm = parse_permutation(cycles, rep.gset().points())?;
    rep.group().index_of(&perm).ok_or_else(|| UsageError(format!("{cycles} is not in the group")))
}

pub fn power(
    kind: PowerKind,
    gset: &Path,
    g: &str,
    h: &str,
    order: usize,
    oracle_check: bool,
) -> Result<Report, UsageError> {
    let rep = load_perm_rep(gset)?;
    let (ge, he) = (element(&rep, g)?, element(&rep, h)?);
    let series = match kind {
        PowerKind::Sym => sym_character_series(&rep, ge, he, order)?,
        PowerKind::Ext => ext_character_series(&rep, ge, he, order)?,
    };
    let coeffs: Vec<(String, String)> =
        (0..=order).map(|n| series.coefficient(n)).map(|(e, o)| (e.to_string(), o.to_string())).collect();
    let mut rows: Vec<Vec<String>> =
        coeffs.iter().enumerate().map(|(n, (e, o))| vec![n.to_string(), e.clone(), o.clone(), String::new()]).collect();
    let mut json = json!({
        "kind": if kind == PowerKind::Sym { "sym" } else { "ext" },
        "g": rep.group().label(ge).to_cycle_string(),
        "h": rep.group().label(he).to_cycle_string(),
        "order": order,
        "even": coeffs.iter().map(|c| c.0.clone()).collect::<Vec<_>>(),
        "odd": coeffs.iter().map(|c| c.1.clone()).collect::<Vec<_>>(),
    });
    let mut ok = true;
    if oracle_check {
        let mut checked = Vec::new();
        for n in 0..=order.min(MAX_ORACLE_POWER) {
            let oracle = match kind {
                PowerKind::Sym => burnside_oracle_sym(&rep, ge, he, n).map(|v| (v.to_string(), "0".to_string())),
                PowerKind::Ext => burnside_oracle_ext(&rep, ge, he, n).map(|(e, o)| (e.to_string(), o.to_string())),
            };
            let oracle = match oracle {
                Ok(v) => v,
                Err(PowerError::TooLarge(_)) => break,
                Err(e) => return Err(e.into()),
            };
            let agrees = oracle == coeffs[n];
            ok &= agrees;
            rows[n][3] = agrees.to_string();
            checked.push(json!({
                "n": n,
                "even": oracle.0,
                "odd": oracle.1,
                "agrees": agrees,
            }));
        }
        json["oracle"] = json!({ "checked": checked, "passed": ok });
    }
    Ok(Report { json, header: vec!["n", "even", "odd", "oracle_agrees"], rows, ok })
}

pub fn koszul(
    n: usize,
    homotopy: bool,
    exactness: bool,
    reciprocity_order: Option<usize>,
    d: usize,
    convention: ConventionArg,
) -> Result<Report, UsageError> {
    let run_all = !homotopy && !exactness && reciprocity_order.is_none();
    let convention = match convention {
        ConventionArg::Derived => SymbolConvention::Derived,
        ConventionArg::LeftLiteral => SymbolConvention::LeftLiteral,
    };
    let mut json = json!({ "n": n });
    let mut rows = Vec::new();
    let mut ok = true;
    if homotopy || run_all {
        check_range("n", n, 0, MAX_HOMOTOPY_DEGREE)?;
        let mut reports = Vec::new();
        for m in 0..=n {
            let r = verify_homotopy_identity_with(m, convention)?;
            ok &= r.passed();
            rows.push(vec![format!("homotopy n={m}"), r.passed().to_string(), format!("{} checks", r.checks)]);
            reports.push(r);
        }
        json["homotopy"] = json!(reports);
    }
    if exactness || run_all {
        check_range("n", n, 0, MAX_EXACTNESS_DEGREE)?;
        let mut reports = Vec::new();
        for m in 1..=n {
            let r = exactness_report(m)?;
            ok &= r.acyclic();
            rows.push(vec![format!("exactness n={m}"), r.acyclic().to_string(), format!("{:?}", r.d_complex.homology)]);
            reports.push(r);
        }
        json["exactness"] = json!(reports);
    }
    if let Some(order) = reciprocity_order {
        check_range("d", d, 1, 3)?;
        let r = reciprocity_check(order, d, DimensionReading::Superdimension)?;
        let control = reciprocity_check(order, d, DimensionReading::Total)?;
        ok &= r.passed;
        rows.push(vec![format!("reciprocity order={order} d={d}"), r.passed.to_string(), String::new()]);
        rows.push(vec![
            "total-dimension control".into(),
            (!control.passed).to_string(),
            control.first_failure.map_or("no failure".into(), |k| format!("first failure at q^{k}")),
        ]);
        json["reciprocity"] = json!(r);
        json["reciprocity_negative_control"] = json!(control);
    }
    json["passed"] = json!(ok);
    Ok(Report { json, header: vec!["check", "passed", "detail"], rows, ok })
}

fn parts_json(l: &Partition) -> Value {
    json!(l.parts())
}

pub fn partitions(n: usize, kind: PartitionKind, p: Option<usize>) -> Result<Report, UsageError> {
    let (name, list) = match kind {
        PartitionKind::All => ("all", enumerate_partitions(n)?),
        PartitionKind::Strict => ("strict", enumerate_strict(n)?),
        PartitionKind::OddParts => ("odd-parts", enumerate_odd_parts(n)?),
        PartitionKind::PRegular => {
            let p = p.ok_or_else(|| UsageError("--kind p-regular needs --p".into()))?;
            ("p-regular", enumerate_p_regular(n, p)?)
        }
    };
    let mut json = json!({
        "n": n,
        "kind": name,
        "count": list.len().to_string(),
        "partitions": list.iter().map(parts_json).collect::<Vec<_>>(),
    });
    if let (PartitionKind::PRegular, Some(p)) = (kind, p) {
        json["p"] = json!(p);
        json["count_by_recurrence"] = json!(count_p_regular(n, p)?.to_string());
    }
    let rows = list.iter().map(|l| vec![l.to_string()]).collect();
    Ok(Report { json, header: vec!["partition"], rows, ok: true })
}
