use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use tsscpp::bijections::*;
use tsscpp::claims::Claim;
use tsscpp::enumerate::{self, FamilyId};
use tsscpp::statistics::{
    boolean_last_row_zeros, boolean_lowest_one_last_diagonal, boolean_zero_count, count_negative_ones, distribution,
    strict_diagonal_entries, Statistic,
};
use tsscpp::{expand_fundamental, fundamental_domain, BooleanTriangle, MonotoneTriangle, Permutation};

/// Every comparison here is between integers or sets, so nothing is allowed to differ.
const EXACT: i64 = 0;

const BUDGET_COUNTS: Duration = Duration::from_secs(60);
const BUDGET_FACTORIAL: Duration = Duration::from_secs(10);
const BUDGET_STATISTICS: Duration = Duration::from_secs(30);
const BUDGET_POSETS: Duration = Duration::from_secs(300);
const BUDGET_DEFAULT: Duration = Duration::from_secs(120);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn naive_inversions(sigma: &[u32]) -> i64 {
    let mut count = 0;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                count += 1;
            }
        }
    }
    count
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn counts() -> Outcome {
    let families = [
        FamilyId::Asm,
        FamilyId::MonotoneTriangle,
        FamilyId::MagogTriangle,
        FamilyId::BooleanTriangle,
        FamilyId::NilpNest,
    ];
    for f in families {
        let c = enumerate::generate(f, 3).unwrap().count();
        if c != 7 {
            return outcome(false, format!("{f} at n=3 gave {c}"));
        }
    }
    let mut seq = Vec::new();
    for n in 1..=6 {
        let asms = enumerate::asms(n).count();
        let booleans = enumerate::boolean_triangles(n).count();
        if asms != booleans {
            return outcome(false, format!("n={n}: {asms} ASMs but {booleans} boolean triangles"));
        }
        seq.push(asms);
    }
    outcome(seq == [1, 2, 7, 42, 429, 7436], format!("ASM = boolean for n=1..6: {seq:?}"))
}

fn permutation_counts() -> Outcome {
    for n in 1..=8 {
        let direct = enumerate::permutation_booleans(n).count() as u64;
        if direct != factorial(n as u64) {
            return outcome(false, format!("n={n}: {direct} permutation boolean triangles"));
        }
    }
    let filtered = enumerate::boolean_triangles(6).filter(|b| b.is_permutation()).count() as u64;
    outcome(filtered == 720, "n! for n=1..8, and 720 of the 7436 order-6 triangles have decreasing rows")
}

fn statistics_preserved() -> Outcome {
    let mut checked = 0;
    for n in 1..=7 {
        for sigma in enumerate::permutations(n) {
            let s = sigma.as_slice();
            let b = permutation_to_boolean(&sigma);
            if boolean_zero_count(&b) as i64 - naive_inversions(s) != EXACT {
                return outcome(false, format!("{sigma}: zeros differ from inversions"));
            }
            let k = s[n - 1] as usize;
            if boolean_last_row_zeros(&b) != n - k {
                return outcome(false, format!("{sigma}: last-row zeros"));
            }
            let ell = s.iter().position(|&v| v as usize == n).unwrap() + 1;
            let lowest = boolean_lowest_one_last_diagonal(&b);
            let expected = if ell == 1 { None } else { Some(ell - 1) };
            if lowest != expected {
                return outcome(false, format!("{sigma}: lowest one {lowest:?}, expected {expected:?}"));
            }
            checked += 1;
        }
    }
    outcome(checked == 5913, format!("{checked} permutations"))
}

fn golden_example() -> Outcome {
    let sigma: Permutation = "463512".parse().unwrap();
    let m = permutation_to_monotone(&sigma);
    let expected_m = MonotoneTriangle::new(vec![
        vec![4],
        vec![4, 6],
        vec![3, 4, 6],
        vec![3, 4, 5, 6],
        vec![1, 3, 4, 5, 6],
        vec![1, 2, 3, 4, 5, 6],
    ])
    .unwrap();
    let b = permutation_to_boolean(&sigma);
    let expected_b =
        BooleanTriangle::new(6, vec![vec![1], vec![0, 0], vec![1, 1, 0], vec![0, 0, 0, 0], vec![1, 0, 0, 0, 0]]).unwrap();
    let ok = naive_inversions(sigma.as_slice()) == 11
        && boolean_zero_count(&b) == 11
        && m == expected_m
        && b == expected_b
        && boolean_last_row_zeros(&b) == 4
        && boolean_lowest_one_last_diagonal(&b) == Some(1)
        && boolean_to_permutation(&expected_b).unwrap() == sigma;
    outcome(ok, "463512: 11 inversions, both triangles, 4 last-row zeros, lowest one in row 1")
}

fn negative_ones() -> Outcome {
    for n in 1..=5 {
        for a in enumerate::asms(n) {
            let m = asm_to_monotone(&a);
            if count_negative_ones(&a) != strict_diagonal_entries(&m) {
                return outcome(false, format!("mismatch at {:?}", a.rows()));
            }
        }
    }
    outcome(true, "all ASMs n=1..5")
}

fn characterizations() -> Outcome {
    for n in 1..=6 {
        let mut by_rows = BTreeSet::new();
        let mut by_plane = BTreeSet::new();
        let mut by_magog = BTreeSet::new();
        for b in enumerate::boolean_triangles(n) {
            let key = b.rows().to_vec();
            if b.is_permutation() {
                by_rows.insert(key.clone());
            }
            if boolean_to_magog(&b).is_permutation() {
                by_magog.insert(key.clone());
            }
            if boolean_to_plane_partition(&b).is_permutation_tsscpp() {
                by_plane.insert(key);
            }
        }
        if by_rows != by_magog || by_rows != by_plane || by_rows.len() as u64 != factorial(n as u64) {
            return outcome(
                false,
                format!("n={n}: rows {} magog {} plane {}", by_rows.len(), by_magog.len(), by_plane.len()),
            );
        }
    }
    outcome(true, "boolean rows, plane partition and magog conditions agree for n=1..6")
}

fn poset_claims() -> Outcome {
    let plan: [(Claim, std::ops::RangeInclusive<usize>); 9] = [
        (Claim::AsmIdeals, 2..=4),
        (Claim::TsscppIdeals, 2..=4),
        (Claim::AsmPermutationsBruhat, 2..=5),
        (Claim::MagogTamari, 2..=5),
        (Claim::MagogCatalan, 2..=5),
        (Claim::BooleanCatalan, 2..=5),
        (Claim::BooleanSandwich, 2..=5),
        (Claim::CoverMoves, 2..=5),
        (Claim::NonLattice, 2..=4),
    ];
    let mut runs = 0;
    for (claim, range) in plan {
        for n in range {
            let r = claim.check(n).unwrap();
            if !r.holds {
                return outcome(false, format!("{} at n={n}: {}", claim.name(), r.witness));
            }
            runs += 1;
        }
    }
    let r = Claim::NonLattice.check(4).unwrap();
    let w = &r.witness["magog_permutations"]["witness"];
    let ok = w["missing"] == "join";
    outcome(ok, format!("{runs} checks; no join at n=4 for {}", w["pair"]))
}

fn exploratory_distributions() -> Outcome {
    for n in 1..=4 {
        let z = distribution(FamilyId::BooleanTriangle, n, Statistic::ZeroThenOne).unwrap();
        let a = distribution(FamilyId::Asm, n, Statistic::NegativeOnes).unwrap();
        if z != a {
            return outcome(false, format!("n={n}: {z:?} vs {a:?}"));
        }
    }
    let z: BTreeMap<i64, u64> = distribution(FamilyId::BooleanTriangle, 5, Statistic::ZeroThenOne).unwrap();
    let a = distribution(FamilyId::Asm, 5, Statistic::NegativeOnes).unwrap();
    let verdict = if z == a { "agree" } else { "differ" };
    outcome(true, format!("equal for n<=4; at n=5 zero-then-one {z:?}, negative ones {a:?}: {verdict}"))
}

fn round_trips() -> Outcome {
    for n in 1..=6 {
        for b in enumerate::boolean_triangles(n) {
            let m = boolean_to_magog(&b);
            let d = fundamental_from_magog(&m);
            let nest = boolean_to_nilp(&b);
            let p = boolean_to_plane_partition(&b);
            let ok = magog_to_boolean(&m) == b
                && magog_from_fundamental(&d).as_ref() == Ok(&m)
                && fundamental_to_boolean(&boolean_to_fundamental(&b)) == b
                && nilp_to_boolean(&nest) == b
                && fundamental_from_nilp(&nilp_from_fundamental(&d)) == d
                && plane_partition_to_boolean(&p).as_ref() == Ok(&b)
                && fundamental_domain(&p).ok().and_then(|d| expand_fundamental(&d).ok()).as_ref() == Some(&p);
            if !ok {
                return outcome(false, format!("TSSCPP side fails at {:?}", b.rows()));
            }
        }
        for a in enumerate::asms(n) {
            if monotone_to_asm(&asm_to_monotone(&a)) != a {
                return outcome(false, format!("ASM side fails at {:?}", a.rows()));
            }
        }
    }
    for n in 1..=7 {
        for sigma in enumerate::permutations(n) {
            let m = permutation_to_monotone(&sigma);
            let b = permutation_to_boolean(&sigma);
            let ok = monotone_to_permutation(&m).as_ref() == Ok(&sigma)
                && boolean_to_permutation(&b).as_ref() == Ok(&sigma)
                && boolean_to_monotone_perm(&b).as_ref() == Ok(&m)
                && monotone_perm_to_boolean(&m).as_ref() == Ok(&b);
            if !ok {
                return outcome(false, format!("permutation side fails at {sigma}"));
            }
        }
    }
    outcome(true, "TSSCPP side n<=6, ASM side n<=6, permutation side n<=7")
}

fn main() {
    let criteria: [(usize, &str, fn() -> Outcome, Duration); 9] = [
        (1, "counts", counts, BUDGET_COUNTS),
        (2, "permutation triangles number n!", permutation_counts, BUDGET_FACTORIAL),
        (3, "statistics preserved", statistics_preserved, BUDGET_STATISTICS),
        (4, "worked example", golden_example, BUDGET_DEFAULT),
        (5, "negative ones", negative_ones, BUDGET_DEFAULT),
        (6, "permutation characterizations", characterizations, BUDGET_DEFAULT),
        (7, "poset statements", poset_claims, BUDGET_POSETS),
        (8, "zero-then-one report", exploratory_distributions, BUDGET_DEFAULT),
        (9, "round trips", round_trips, BUDGET_DEFAULT),
    ];
    let mut failed = 0;
    for (id, name, run, budget) in criteria {
        let start = Instant::now();
        let mut o = run();
        let took = start.elapsed();
        if took > budget {
            o.ok = false;
            o.detail = format!("{}; over budget of {budget:?}", o.detail);
        }
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("{tag} {id} {name} ({:.2}s): {}", took.as_secs_f64(), o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
