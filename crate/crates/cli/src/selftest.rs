//! Built-in verification suite. The quick level runs every check on degrees
//! up to 4; the full level uses the sizes of the acceptance criteria.

use std::sync::Arc;

use catpow::groups::{symmetric_group, FiniteGroup, GSet};
use catpow::koszul::{exactness_report, reciprocity_check, verify_homotopy_identity, DimensionReading};
use catpow::partitions::{enumerate_odd_parts, enumerate_strict, strict_parity_counts};
use catpow::power_ops::{burnside_oracle_ext, burnside_oracle_sym, ext_character_series, sym_character_series};
use catpow::schur_cocycle::{
    classify_classes, cocycle, irreducible_counts, schur_supersymbol_character, square_move_parity_check,
    RegularityMode,
};
use catpow::super_k::{clifford_k, tensor_super_2vs, KDim, SuperDim};
use catpow::two_reps::{sign_two_rep, PermTwoRep, SuperPair};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{Level, Report};

type Check = Result<String, String>;

struct Sizes {
    exhaustive: usize,
    sampled: &'static [usize],
    regularity: usize,
    criterion_counts: usize,
    pairs: usize,
    power: usize,
    homotopy: usize,
    exactness: usize,
    reciprocity: usize,
}

const QUICK: Sizes = Sizes {
    exhaustive: 4,
    sampled: &[],
    regularity: 4,
    criterion_counts: 4,
    pairs: 4,
    power: 4,
    homotopy: 4,
    exactness: 4,
    reciprocity: 16,
};

const FULL: Sizes = Sizes {
    exhaustive: 5,
    sampled: &[6, 7],
    regularity: 7,
    criterion_counts: 10,
    pairs: 6,
    power: 5,
    homotopy: 8,
    exactness: 6,
    reciprocity: 30,
};

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn cocycle_identity(s: &Sizes, seed: u64) -> Check {
    for n in 1..=s.exhaustive {
        ensure(cocycle(n).map_err(err)?.first_cocycle_failure().is_none(), || format!("n={n}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &n in s.sampled {
        let failure = cocycle(n).map_err(err)?.sampled_cocycle_failure(&mut rng, 100_000);
        ensure(failure.is_none(), || format!("n={n} at {failure:?}"))?;
    }
    Ok(format!("exhaustive n≤{}, sampled {:?}", s.exhaustive, s.sampled))
}

fn square_moves(s: &Sizes) -> Check {
    for n in 1..=s.exhaustive {
        for sigma in symmetric_group(n).map_err(err)?.labels() {
            ensure(square_move_parity_check(sigma).map_err(err)?, || format!("{sigma:?}"))?;
        }
    }
    Ok(format!("n≤{}", s.exhaustive))
}

fn regularity(s: &Sizes) -> Check {
    for n in 1..=s.regularity {
        let crit = classify_classes(n, RegularityMode::Criterion).map_err(err)?;
        let brute = classify_classes(n, RegularityMode::Brute).map_err(err)?;
        ensure(crit == brute, || format!("n={n}"))?;
        ensure(irreducible_counts(n, RegularityMode::Brute).map_err(err)? == strict_parity_counts(n).map_err(err)?, || {
            format!("brute-force counts at n={n}")
        })?;
    }
    for n in 1..=s.criterion_counts {
        ensure(irreducible_counts(n, RegularityMode::Criterion).map_err(err)? == strict_parity_counts(n).map_err(err)?, || {
            format!("criterion counts at n={n}")
        })?;
    }
    for n in 0..=40 {
        ensure(enumerate_strict(n).map_err(err)?.len() == enumerate_odd_parts(n).map_err(err)?.len(), || {
            format!("Euler at n={n}")
        })?;
    }
    Ok(format!("brute force n≤{}, criterion counts n≤{}", s.regularity, s.criterion_counts))
}

fn supersymbols(s: &Sizes) -> Check {
    for n in 1..=s.pairs {
        let t = cocycle(n).map_err(err)?;
        let rep = sign_two_rep(n).map_err(err)?;
        let g = t.group().clone();
        for (x, y) in g.commuting_pairs() {
            let closed = schur_supersymbol_character(g.label(x), g.label(y)).map_err(err)?;
            ensure(t.supersymbol_elems(x, y).map_err(err)? == closed, || format!("n={n}"))?;
            let e = closed as i64;
            let slot = if g.label(x).is_odd() { SuperPair::new(0, e) } else { SuperPair::new(e, 0) };
            ensure(rep.two_character(x, y).map_err(err)? == slot, || format!("2-character at n={n}"))?;
        }
    }
    Ok(format!("n≤{}", s.pairs))
}

fn power_traces(s: &Sizes) -> Check {
    let s3 = Arc::new(symmetric_group(3).map_err(err)?);
    let mut reps: Vec<PermTwoRep> =
        (1..=3).map(|d| PermTwoRep::new(GSet::natural(Arc::new(FiniteGroup::trivial(d))))).collect();
    reps.push(PermTwoRep::new(GSet::regular(Arc::new(FiniteGroup::cyclic(2).map_err(err)?))));
    reps.push(PermTwoRep::new(GSet::regular(Arc::new(FiniteGroup::cyclic(4).map_err(err)?))));
    reps.push(PermTwoRep::new(GSet::natural(s3.clone())));
    reps.push(PermTwoRep::new(GSet::regular(s3)));
    for rep in &reps {
        for (g, h) in rep.group().commuting_pairs() {
            let sym = sym_character_series(rep, g, h, s.power).map_err(err)?;
            let ext = ext_character_series(rep, g, h, s.power).map_err(err)?;
            for n in 0..=s.power {
                ensure(sym.coefficient(n).0 == burnside_oracle_sym(rep, g, h, n).map_err(err)?, || format!("sym n={n}"))?;
                ensure(ext.coefficient(n) == burnside_oracle_ext(rep, g, h, n).map_err(err)?, || format!("ext n={n}"))?;
            }
        }
    }
    Ok(format!("{} representations, n≤{}", reps.len(), s.power))
}

fn koszul(s: &Sizes) -> Check {
    for n in 0..=s.homotopy {
        let r = verify_homotopy_identity(n).map_err(err)?;
        ensure(r.passed(), || format!("homotopy at n={n}"))?;
    }
    for n in 1..=s.exactness {
        ensure(exactness_report(n).map_err(err)?.acyclic(), || format!("homology at n={n}"))?;
    }
    for d in 1..=3 {
        let r = reciprocity_check(s.reciprocity, d, DimensionReading::Superdimension).map_err(err)?;
        ensure(r.passed, || format!("reciprocity d={d}"))?;
    }
    let control = reciprocity_check(s.reciprocity, 1, DimensionReading::Total).map_err(err)?;
    ensure(control.first_failure == Some(2), || "negative control did not fail at q^2".into())?;
    Ok(format!("homotopy n≤{}, exactness n≤{}, reciprocity mod q^{}", s.homotopy, s.exactness, s.reciprocity + 1))
}

fn k_arithmetic() -> Check {
    for n in 0..=20 {
        let expected = if n % 2 == 0 { KDim::new(1, 0) } else { KDim::new(0, 1) };
        ensure(clifford_k(n).complexified == expected, || format!("C_{n}"))?;
    }
    ensure(tensor_super_2vs(SuperDim::new(0, 1), SuperDim::new(0, 1)) == SuperDim::new(1, 0), || "[0|1]²".into())?;
    Ok("Clifford table n≤20, tensor rule".into())
}

pub fn run(level: Level, seed: u64) -> Report {
    let sizes = match level {
        Level::Quick => &QUICK,
        Level::Full => &FULL,
    };
    let checks: Vec<(&str, Check)> = vec![
        ("cocycle identity", cocycle_identity(sizes, seed)),
        ("square-move parity", square_moves(sizes)),
        ("c-regularity", regularity(sizes)),
        ("supersymbols and 2-characters", supersymbols(sizes)),
        ("power operation traces", power_traces(sizes)),
        ("Koszul complexes", koszul(sizes)),
        ("K-arithmetic", k_arithmetic()),
    ];
    let ok = checks.iter().all(|(_, r)| r.is_ok());
    let rows = checks
        .iter()
        .map(|(name, r)| {
            let (pass, detail) = match r {
                Ok(d) => ("true", d.clone()),
                Err(d) => ("false", d.clone()),
            };
            vec![name.to_string(), pass.to_string(), detail]
        })
        .collect();
    let json = json!({
        "level": if level == Level::Quick { "quick" } else { "full" },
        "seed": seed,
        "passed": ok,
        "checks": checks.iter().map(|(name, r)| json!({
            "name": name,
            "passed": r.is_ok(),
            "detail": match r { Ok(d) | Err(d) => d },
        })).collect::<Vec<_>>(),
    });
    Report { json, header: vec!["check", "passed", "detail"], rows, ok }
}
