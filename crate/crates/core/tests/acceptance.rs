//! One pass/fail line per acceptance criterion. Exits non-zero on failure.

mod common;

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{o, rand_expr, rand_ordinal, rand_poly_ordinal, rand_tree, Poly};
use szlenk_calc::gamma::{
    branch_distribution, decompose, enumerate_level, enumerate_truncated, gamma_node_classify,
    prob, sample_maximal, Budget, GammaNode, Membership,
};
use szlenk_calc::ordinal::left_sub;
use szlenk_calc::rational::rational;
use szlenk_calc::szlenk::{
    attainable, sz_c_interval, sz_ck, sz_frak_g, sz_frak_s, BoundKind, IndexKind, NormingParams,
};
use szlenk_calc::tree::{
    bn_derived_member, cb_interval_derivative, cb_interval_index, embed_exists_bruteforce,
    is_monotone_length_preserving, monotone_embed, quotient_tree_order_oracle,
    quotient_tree_stages, tree_order, BnNode, IntervalDerivStage, TreeDescriptor,
};
use szlenk_calc::{ExtOrdinal, Ordinal, Rational};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("took {spent:?}, limit {limit:?}"))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ordinal_laws() -> Check {
    let start = Instant::now();
    let mut r = rng(1);
    for i in 0..1000 {
        let a = rand_ordinal(&mut r, 3, 3);
        let b = rand_ordinal(&mut r, 3, 3);
        let c = rand_ordinal(&mut r, 3, 3);
        let ctx = || format!("case {i}: a={a} b={b} c={c}");
        ensure((&(&a + &b) + &c) == (&a + &(&b + &c)), || format!("add assoc, {}", ctx()))?;
        ensure((&(&a * &b) * &c) == (&a * &(&b * &c)), || format!("mul assoc, {}", ctx()))?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("left distrib, {}", ctx()))?;
        // Exponent law on a small finite-part exponent to keep coefficients bounded.
        let base = rand_poly_ordinal(&mut r, 3, 2);
        let m = rand_ordinal(&mut r, 2, 1);
        let n = Ordinal::nat(r.gen_range(0..3));
        let lhs = base.checked_pow(&(&m + &n)).map_err(|e| e.to_string())?;
        let rhs = &base.checked_pow(&m).map_err(|e| e.to_string())?
            * &base.checked_pow(&n).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("exp law, base={base} m={m} n={n}"))?;
        if b < c {
            ensure(&a + &b < &a + &c, || format!("add monotone, {}", ctx()))?;
            if !a.is_zero() {
                ensure(&a * &b < &a * &c, || format!("mul monotone, {}", ctx()))?;
            }
            if base > Ordinal::one() && b.depth() <= 2 && c.depth() <= 2 {
                let (pb, pc) = (base.checked_pow(&b), base.checked_pow(&c));
                if let (Ok(pb), Ok(pc)) = (pb, pc) {
                    ensure(pb < pc, || format!("pow monotone, base={base}, {}", ctx()))?;
                }
            }
        }
        if !b.is_zero() {
            let (q, rem) = a.divmod(&b).map_err(|e| e.to_string())?;
            ensure(&(&b * &q) + &rem == a && rem < b, || format!("divmod, {}", ctx()))?;
        }
        // Independent oracle below ω^ω.
        let (x, y) = (rand_poly_ordinal(&mut r, 4, 4), rand_poly_ordinal(&mut r, 4, 4));
        let (px, py) = (Poly::from_ordinal(&x).unwrap(), Poly::from_ordinal(&y).unwrap());
        ensure(px.add(&py).to_ordinal() == &x + &y, || format!("oracle add {x} {y}"))?;
        ensure(px.mul(&py).to_ordinal() == &x * &y, || format!("oracle mul {x} {y}"))?;
        ensure(px.cmp(&py) == x.cmp(&y), || format!("oracle cmp {x} {y}"))?;
    }
    within(start, Duration::from_secs(10))
}

fn gamma_operator() -> Check {
    let mut r = rng(2);
    for _ in 0..500 {
        let a = rand_ordinal(&mut r, 3, 4);
        let g = a.gamma().map_err(|e| e.to_string())?;
        ensure(g >= a, || format!("gamma({a}) = {g} < a"))?;
        ensure(ExtOrdinal::from(g.clone()).is_gamma_number(), || format!("gamma({a}) = {g}"))?;
        // Additive principality checked directly: y + z < g for sampled y, z < g.
        for _ in 0..5 {
            let (y, z) = (rand_ordinal(&mut r, 3, 4), rand_ordinal(&mut r, 3, 4));
            if y < g && z < g {
                ensure(&y + &z < g, || format!("{y} + {z} reaches {g}"))?;
            }
        }
        // Any c in [a, g) splits as ω^e + rest with both parts below c.
        if a < g {
            let e = a.leading_exponent().unwrap().clone();
            let head = Ordinal::omega_pow(e.clone());
            for c in [a.clone(), Ordinal::monomial(e, a.leading_coefficient().unwrap() + 1)] {
                if c < g && !c.is_power_of_omega() {
                    let rest = left_sub(&head, &c).unwrap();
                    ensure(head < c && rest < c, || format!("{c} is additively principal"))?;
                }
            }
        }
    }
    Ok(())
}

fn grid_below_omega6() -> Vec<Ordinal> {
    let mut out = Vec::new();
    for code in 0..4u64.pow(6) {
        let terms = (0..6u64)
            .rev()
            .map(|e| (Ordinal::nat(e), (code / 4u64.pow(e as u32)) % 4))
            .filter(|(_, c)| *c > 0)
            .collect();
        out.push(Ordinal::from_terms(terms).unwrap());
    }
    for k in 0..5 {
        out.push(Ordinal::nat(100 + k));
    }
    out
}

/// Number of derivation steps until `[0, ξ]` is empty.
fn iterated_derivative_index(xi: &Ordinal) -> Result<Ordinal, String> {
    let mut stage = IntervalDerivStage::Whole(xi.clone());
    let mut steps = 0;
    while !stage.is_empty() {
        stage = stage.step().map_err(|e| e.to_string())?;
        steps += 1;
    }
    Ok(Ordinal::nat(steps))
}

fn cb_cross_check() -> Check {
    for xi in grid_below_omega6() {
        let idx = cb_interval_index(&xi).map_err(|e| e.to_string())?;
        ensure(idx == iterated_derivative_index(&xi)?, || format!("oracle at {xi}"))?;
        let lead = xi.leading_exponent().cloned().unwrap_or_default();
        ensure(idx == &lead + &Ordinal::one(), || format!("lead+1 at {xi}"))?;
        for z in 0..7 {
            let stage = cb_interval_derivative(&xi, &Ordinal::nat(z)).map_err(|e| e.to_string())?;
            ensure(stage.is_empty() == (Ordinal::nat(z) >= idx), || format!("stage {z} at {xi}"))?;
        }
    }
    Ok(())
}

fn interval_route() -> Check {
    for xi in grid_below_omega6() {
        let via_ck = sz_ck(&cb_interval_index(&xi).unwrap().into()).map_err(|e| e.to_string())?;
        let direct = sz_c_interval(&xi).map_err(|e| e.to_string())?;
        ensure(via_ck == direct, || format!("routes differ at {xi}: {via_ck} vs {direct}"))?;
    }
    ensure(sz_c_interval(&o("w")).unwrap() == o("w").into(), || "C([0,w])".into())?;
    ensure(sz_c_interval(&o("w^w")).unwrap() == o("w^2").into(), || "C([0,w^w])".into())?;
    // ω^{ω^ζ} gives ω^{ζ+1}.
    for (xi, want) in [("w^(w^2)", "w^3"), ("w^(w^3)", "w^4"), ("w^(w^w)", "w^(w + 1)")] {
        ensure(sz_c_interval(&o(xi)).unwrap() == o(want).into(), || xi.to_owned())?;
    }
    Ok(())
}

fn sum(values: impl IntoIterator<Item = Rational>) -> Rational {
    values.into_iter().fold(Rational::zero(), |a, b| a + b)
}

fn probability_hierarchy() -> Check {
    let mut r = rng(5);
    for xi_n in 1..=3u64 {
        let xi = Ordinal::nat(xi_n);
        let eta = Ordinal::nat(xi_n - 1);
        for _ in 0..100 {
            let t = sample_maximal(&xi, &mut r, 4).map_err(|e| e.to_string())?;
            let dist = branch_distribution(&t, &xi).map_err(|e| e.to_string())?;
            let total = sum(dist.iter().map(|(_, w)| w.clone()));
            ensure(total.is_one(), || format!("{t} in Γ_{xi}: sum {total}"))?;
            // Level index from the first entry: ω^η(n−1) ≤ t₁ < ω^η·n.
            let (q, _) = t.entries()[0].divmod(&Ordinal::omega_pow(eta.clone())).unwrap();
            let n = q.as_nat().unwrap() + 1;
            for len in 1..=t.len() {
                let s = t.prefix(len);
                let d = decompose(&s, &eta, n).map_err(|e| e.to_string())?;
                let lhs = Rational::from_integer(n.into()) * prob(&s, &xi).unwrap();
                let rhs = prob(&d.iota, &eta).map_err(|e| e.to_string())?;
                ensure(lhs == rhs, || format!("n·P(t) at {s}, xi={xi}"))?;
            }
            // Each level block of the maximal branch carries weight 1/n.
            let d = decompose(&t, &eta, n).unwrap();
            let mut lo = 0;
            for hi in d.level_prefix_lengths() {
                let block = sum(dist[lo..hi].iter().map(|(_, w)| w.clone()));
                ensure(block == rational(1, n as i64), || format!("level mass at {t}"))?;
                lo = hi;
            }
        }
    }
    for n in 1..=10u64 {
        let chain: Vec<Ordinal> = (0..n).rev().map(Ordinal::nat).collect();
        let dist = branch_distribution(&GammaNode::new(chain), &o("1")).map_err(|e| e.to_string())?;
        ensure(dist.iter().all(|(_, w)| *w == rational(1, n as i64)), || format!("uniform 1/{n}"))?;
    }
    Ok(())
}

fn gamma_one_enumeration() -> Check {
    let budget = Budget {
        max_n: 10,
        ..Budget::default()
    };
    let got: Vec<GammaNode> = enumerate_truncated(&o("1"), &budget)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|e| e.node)
        .collect();
    let mut want = Vec::new();
    for n in 1..=10u64 {
        for j in (0..n).rev() {
            want.push(GammaNode::new((j..n).rev().map(Ordinal::nat).collect()));
        }
    }
    let (mut g, mut w) = (got.clone(), want);
    g.sort();
    w.sort();
    ensure(g == w, || "Γ_1 window differs from the chains".into())?;

    for (xi, max_n) in [("0", 4), ("1", 3), ("2", 2), ("w", 2)] {
        let small = Budget {
            max_n,
            limit_branches: 2,
            max_nodes: 100_000,
        };
        let xi = o(xi);
        let unit = Ordinal::omega_pow(xi.clone());
        let levels: Vec<Vec<GammaNode>> = (1..=max_n)
            .map(|n| {
                enumerate_level(&xi, n, &small)
                    .map(|v| v.into_iter().map(|(t, _)| t).collect())
                    .map_err(|e| e.to_string())
            })
            .collect::<Result<_, _>>()?;
        for (i, level) in levels.iter().enumerate() {
            let n = i as u64 + 1;
            let lo = &unit * &Ordinal::nat(n - 1);
            let hi = &unit * &Ordinal::nat(n);
            for t in level {
                let first = &t.entries()[0];
                ensure(lo <= *first && *first < hi, || format!("first entry of {t} at n={n}"))?;
                ensure(
                    gamma_node_classify(t, &xi.successor().unwrap()) != Membership::NotMember,
                    || format!("{t} not in Γ_(xi+1)"),
                )?;
            }
            for (j, other) in levels.iter().enumerate().filter(|(j, _)| *j != i) {
                for a in level {
                    for b in other {
                        ensure(!a.is_prefix_of(b), || {
                            format!("{a} (n={n}) below {b} (n={})", j + 1)
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn embedding_criterion() -> Check {
    let start = Instant::now();
    let mut r = rng(7);
    let mut outcomes = [0u32; 2];
    for i in 0..500 {
        let (ns, nt) = (r.gen_range(1..=12), r.gen_range(1..=12));
        let s = rand_tree(&mut r, ns);
        let t = rand_tree(&mut r, nt);
        let by_order = s.order() <= t.order();
        outcomes[by_order as usize] += 1;
        let constructed = monotone_embed(&s, &t);
        let brute = embed_exists_bruteforce(&s, &t).map_err(|e| e.to_string())?;
        ensure(constructed.is_some() == by_order && brute == by_order, || {
            format!("case {i}: S={s} T={t} order={by_order} brute={brute}")
        })?;
        if let Some(map) = constructed {
            ensure(is_monotone_length_preserving(&s, &t, &map), || format!("bad map {s} -> {t}"))?;
        }
    }
    ensure(outcomes.iter().all(|&c| c >= 50), || format!("unbalanced sample {outcomes:?}"))?;
    within(start, Duration::from_secs(60))
}

fn bn_closed_form() -> Check {
    for m in 0..=8u64 {
        let stages = quotient_tree_stages(m).map_err(|e| e.to_string())?;
        for (zeta, stage) in stages.iter().enumerate() {
            for seq in stage {
                let node = BnNode::new(1, seq.iter().map(|&g| (Ordinal::nat(g), 1)).collect());
                let member = bn_derived_member(&node, &Ordinal::nat(m), &Ordinal::nat(zeta as u64))
                    .map_err(|e| e.to_string())?;
                ensure(member, || format!("m={m} stage {zeta} keeps {seq:?}"))?;
            }
            let expected = count_decreasing_with_last_at_least(m, zeta as u64);
            ensure(stage.len() as u64 == expected, || format!("m={m} stage {zeta} size"))?;
        }
        let want = Ordinal::nat(m + 1);
        ensure(quotient_tree_order_oracle(m).unwrap() == want, || format!("order at m={m}"))?;
        let closed = tree_order(&TreeDescriptor::BnFamily {
            bound: Ordinal::nat(m),
        })
        .unwrap();
        ensure(closed == want.into(), || format!("closed form at m={m}"))?;
    }
    Ok(())
}

/// Nonempty strictly decreasing sequences over `{0..m−1}` ending at `≥ ζ`.
fn count_decreasing_with_last_at_least(m: u64, zeta: u64) -> u64 {
    // A sequence ending at g is any subset of {g+1..m−1} followed by g.
    (zeta..m).map(|g| 1u64 << (m - 1 - g)).sum()
}

fn frak_g_pipeline() -> Check {
    for (alpha, want) in [("0", "w^w"), ("1", "w^(w^2)"), ("2", "w^(w^3)")] {
        let params = NormingParams::new(o(alpha), rational(1, 2));
        let (v, audit) = sz_frak_g(&params).map_err(|e| e.to_string())?;
        ensure(v == o(want).into(), || format!("alpha={alpha}: {v}"))?;
        let xi = params.xi();
        for n in 1..=4u64 {
            let target = ExtOrdinal::from(&xi.checked_pow(&Ordinal::nat(n)).unwrap() + &Ordinal::one());
            let found = audit.iter().any(|b| {
                b.kind == BoundKind::Exact
                    && b.value == target
                    && b.epsilon < params.theta_pow(n - 1)
                    && b.subject == format!("L(n={n},k={n},gamma=0)")
            });
            ensure(found, || format!("alpha={alpha}: no exact entry for n={n}"))?;
        }
        let aggregates: Vec<_> = audit.iter().filter(|b| b.subject == "aggregate").collect();
        ensure(!aggregates.is_empty(), || "no aggregates".into())?;
        ensure(aggregates.iter().all(|b| b.value < v), || "aggregate not below".into())?;
    }
    Ok(())
}

fn frak_s_pipeline() -> Check {
    for (a, b, want) in [("1", "1", "w^2"), ("w", "1", "w^(w + 1)"), ("2", "w", "w^(w)")] {
        let params = NormingParams::new(o(a), rational(1, 2)).with_beta(o(b));
        match sz_frak_s(&params) {
            Ok((v, audit)) => {
                ensure(v == o(want).into(), || format!("({a},{b}): {v}"))?;
                ensure(
                    audit.iter().filter(|x| x.subject == "aggregate").all(|x| x.value < v),
                    || format!("({a},{b}) aggregate"),
                )?;
            }
            Err(e) if a == "2" => {
                // 2 + ω = ω = max, so the precondition fails.
                ensure(e.to_string().contains("precondition"), || e.to_string())?;
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    let params = NormingParams::new(o("0"), rational(1, 2)).with_beta(o("w"));
    ensure(
        matches!(sz_frak_s(&params), Err(szlenk_calc::Error::PreconditionViolated(_))),
        || "alpha=0, beta=w accepted".into(),
    )
}

fn attainability() -> Check {
    for v in ["1", "w", "w^2", "w^w"] {
        ensure(attainable(IndexKind::Sz, &ExtOrdinal::parse(v).unwrap()), || v.to_owned())?;
    }
    for v in ["5", "w+1", "w^(w^w)"] {
        ensure(!attainable(IndexKind::Sz, &ExtOrdinal::parse(v).unwrap()), || v.to_owned())?;
    }
    for n in 1..=10 {
        ensure(attainable(IndexKind::I1, &Ordinal::nat(n).into()), || format!("I1 {n}"))?;
    }
    Ok(())
}

fn cli_determinism() -> Check {
    let start = Instant::now();
    let mut r = rng(12);
    for _ in 0..1000 {
        let expr = rand_expr(&mut r, 4);
        let a = Ordinal::parse(&expr).map_err(|e| format!("{expr}: {e}"))?;
        let text = a.to_string();
        let b = Ordinal::parse(&text).map_err(|e| format!("{text}: {e}"))?;
        ensure(a == b && b.to_string() == text, || format!("round trip of {expr}"))?;
        let u = a.render(szlenk_calc::Style::Unicode);
        ensure(Ordinal::parse(&u).ok() == Some(a.clone()), || format!("unicode {u}"))?;
    }
    let bin = env!("CARGO_BIN_EXE_szlenk");
    let invocations: [&[&str]; 3] = [
        &["ord", "gamma", "w^2+1"],
        &["szlenk", "frak-g", "--alpha", "0", "--theta", "1/2", "--format", "record"],
        &["gnode", "enum", "--xi", "w", "--n", "2"],
    ];
    for args in invocations {
        let run = || std::process::Command::new(bin).args(args).env_remove("SZLENK_FORMAT").output();
        let (x, y) = (run().map_err(|e| e.to_string())?, run().map_err(|e| e.to_string())?);
        ensure(x.status.success() && x.stdout == y.stdout, || format!("{args:?}"))?;
    }
    within(start, Duration::from_secs(10))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("ordinal algebra laws", ordinal_laws),
        ("gamma operator", gamma_operator),
        ("CB index cross-check", cb_cross_check),
        ("C([0,xi]) route agreement", interval_route),
        ("probability hierarchy", probability_hierarchy),
        ("Gamma_1 enumeration", gamma_one_enumeration),
        ("monotone embeddings", embedding_criterion),
        ("B_n closed form", bn_closed_form),
        ("first norming pipeline", frak_g_pipeline),
        ("second norming pipeline", frak_s_pipeline),
        ("attainability", attainability),
        ("CLI determinism and round trip", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("criterion {:2} PASS {name} ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
