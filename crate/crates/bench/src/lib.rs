//! Synthetic inputs shared by the benchmarks.

use fundstyle_core::{MonthlySeries, YearMonth};

/// Linear trend, a fixed zero-sum seasonal pattern, and deterministic
/// bounded noise. Always positive.
pub fn synthetic_series(ticker: &str, months: usize) -> MonthlySeries {
    const SEASONAL: [f64; 12] = [-7.0, -10.0, -6.0, 0.0, 0.0, 6.0, 8.0, -6.0, 5.0, 8.0, 4.0, -2.0];
    let values = (0..months)
        .map(|i| {
            let x = i as f64;
            250.0 + 8.0 * x + SEASONAL[i % 12] + 12.0 * (x * 1.7).sin()
        })
        .collect();
    MonthlySeries::new(ticker, YearMonth::new(2008, 1), values).expect("synthetic series is valid")
}

/// `days` weekday rows of `date,close` text starting 2008-01-01.
pub fn synthetic_daily_csv(days: usize) -> String {
    use std::fmt::Write;

    let mut out = String::from("date,close\n");
    let mut written = 0;
    let mut ordinal = 0i64;
    // 2008-01-01 was a Tuesday
    while written < days {
        let weekday = (ordinal + 1) % 7;
        if weekday < 5 {
            let date = civil_from_days(13_879 + ordinal);
            let close = 300.0 + 0.2 * written as f64 + 5.0 * (written as f64 * 0.3).sin();
            writeln!(out, "{:04}-{:02}-{:02},{close:.2}", date.0, date.1, date.2).unwrap();
            written += 1;
        }
        ordinal += 1;
    }
    out
}

// days since 1970-01-01 to (y, m, d)
fn civil_from_days(z: i64) -> (i64, u32, u32) {
    let z = z + 719_468;
    let era = z.div_euclid(146_097);
    let doe = z - era * 146_097;
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let d = (doy - (153 * mp + 2) / 5 + 1) as u32;
    let m = if mp < 10 { mp + 3 } else { mp - 9 } as u32;
    let y = yoe + era * 400 + i64::from(m <= 2);
    (y, m, d)
}
