//! Linear-scaling benchmark. Polygon generation is not timed.

use std::time::{Duration, Instant};

use tri_extremal::general_stable::enumerate_g3stable_detailed;
use tri_extremal::three_stable::enumerate_all_3stable_detailed;
use tri_extremal::{random_convex, Counters};

use crate::CliError;

/// Accepts `100000`, `10^5`, `2*10^5`, `2·10^5` and `4e5`.
pub fn parse_size(text: &str) -> Result<usize, String> {
    let mut size: u128 = 1;
    for factor in text.trim().split(['*', '·', 'x']) {
        let factor = factor.trim();
        let value = if let Some((base, exp)) = factor.split_once('^') {
            let base: u128 = base.trim().parse().map_err(|_| format!("bad size {text:?}"))?;
            let exp: u32 = exp.trim().parse().map_err(|_| format!("bad size {text:?}"))?;
            base.checked_pow(exp)
        } else if let Some((mant, exp)) = factor.split_once(['e', 'E']) {
            let mant: u128 = mant.trim().parse().map_err(|_| format!("bad size {text:?}"))?;
            let exp: u32 = exp.trim().parse().map_err(|_| format!("bad size {text:?}"))?;
            10u128.checked_pow(exp).and_then(|p| p.checked_mul(mant))
        } else {
            Some(factor.replace('_', "").parse().map_err(|_| format!("bad size {text:?}"))?)
        };
        size = value.and_then(|v| size.checked_mul(v)).ok_or_else(|| format!("size {text:?} is too large"))?;
    }
    let size = usize::try_from(size).map_err(|_| format!("size {text:?} is too large"))?;
    if size < 3 {
        return Err(format!("size must be at least 3, got {size}"));
    }
    Ok(size)
}

/// About `5.5 * 10^6` strictly convex vertices fit in a `10^9` grid; larger
/// polygons need a wider one.
fn default_bound(n: usize) -> i64 {
    if n <= 2_000_000 {
        1_000_000_000
    } else {
        1_000_000_000_000
    }
}

struct Row {
    n: usize,
    three: (Duration, Counters),
    general: (Duration, Counters),
}

fn fastest<F: FnMut() -> Result<Counters, tri_extremal::Error>>(reps: usize, mut f: F) -> Result<(Duration, Counters), CliError> {
    let mut best = Duration::MAX;
    let mut counters = Counters::default();
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        counters = f()?;
        best = best.min(start.elapsed());
    }
    Ok((best, counters))
}

fn per_n(count: u64, n: usize) -> f64 {
    count as f64 / n as f64
}

pub fn bench(sizes: &[usize], seed: u64, bound: Option<i64>, reps: usize) -> Result<(), CliError> {
    if sizes.is_empty() {
        return Err(CliError::Usage("--sizes needs at least one size".into()));
    }
    println!(
        "{:>10} {:>12} {:>8} {:>8} {:>12} {:>8} {:>9} {:>8}",
        "n", "3-stable ms", "adv/n", "pred/n", "general ms", "adv/n", "gadget/n", "scan/n"
    );
    let mut rows = Vec::new();
    for &n in sizes {
        let poly = random_convex(n, seed, bound.unwrap_or_else(|| default_bound(n)))?;
        let three = fastest(reps, || enumerate_all_3stable_detailed(&poly).map(|e| e.counters))?;
        let general = fastest(reps, || enumerate_g3stable_detailed(&poly).map(|e| e.counters))?;
        let row = Row { n, three, general };
        let (t, g) = (&row.three.1, &row.general.1);
        println!(
            "{:>10} {:>12.2} {:>8.3} {:>8.3} {:>12.2} {:>8.3} {:>9.3} {:>8.3}",
            n,
            row.three.0.as_secs_f64() * 1e3,
            per_n(t.cursor_advances, n),
            per_n(t.predicate_evals, n),
            row.general.0.as_secs_f64() * 1e3,
            per_n(g.cursor_advances, n),
            per_n(g.gadget_calls, n),
            per_n(g.scan_moves, n),
        );
        rows.push(row);
    }
    if rows.len() > 1 {
        println!();
        println!("{:>10} {:>10} {:>14} {:>14}", "from", "to", "3-stable time", "general time");
        for w in rows.windows(2) {
            let ratio = |a: Duration, b: Duration| b.as_secs_f64() / a.as_secs_f64().max(f64::MIN_POSITIVE);
            println!(
                "{:>10} {:>10} {:>13.2}x {:>13.2}x",
                w[0].n,
                w[1].n,
                ratio(w[0].three.0, w[1].three.0),
                ratio(w[0].general.0, w[1].general.0)
            );
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_syntax() {
        assert_eq!(parse_size("100000"), Ok(100_000));
        assert_eq!(parse_size("10^5"), Ok(100_000));
        assert_eq!(parse_size("2*10^5"), Ok(200_000));
        assert_eq!(parse_size("2·10^5"), Ok(200_000));
        assert_eq!(parse_size("4e5"), Ok(400_000));
        assert_eq!(parse_size("1_000"), Ok(1_000));
        assert!(parse_size("2").is_err());
        assert!(parse_size("ten").is_err());
        assert!(parse_size("10^40").is_err());
    }
}
