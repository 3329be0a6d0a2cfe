use num_traits::Zero;
use serde_json::{json, Value};
use thetabound::numeric::{pow10, render_decimal, surd_to_interval};
use thetabound::{QuadSurd, Rational};

/// Significant digits of every display-only decimal.
pub const SIG: usize = 10;

pub fn dec_rat(x: &Rational) -> String {
    render_decimal(x, SIG)
}

/// Decimal of a surd from a rational enclosure narrow enough that both ends
/// render identically.
pub fn dec(x: &QuadSurd) -> String {
    if let Some(r) = x.to_rational() {
        return dec_rat(&r);
    }
    let mut k = 40;
    loop {
        let iv = surd_to_interval(x, &pow10(-k));
        let (lo, hi) = (dec_rat(iv.lo()), dec_rat(iv.hi()));
        if lo == hi || k > 4000 {
            return lo;
        }
        k *= 2;
    }
}

pub fn dec_f64(x: f64) -> String {
    match Rational::from_float(x) {
        Some(r) if !r.is_zero() => dec_rat(&r),
        Some(_) => "0".into(),
        None => x.to_string(),
    }
}

pub fn frac(x: &Rational) -> Value {
    json!([x.numer().to_string(), x.denom().to_string()])
}

pub fn surd(x: &QuadSurd) -> Value {
    serde_json::to_value(x).expect("surd serializes")
}

/// `p/q` or the surd's display form.
pub fn text(x: &QuadSurd) -> String {
    x.to_string()
}

/// Header plus rows for `--format csv`.
#[derive(Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table { header: header.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("csv write");
        for r in &self.rows {
            w.write_record(r).expect("csv write");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("utf-8")
    }

    /// Aligned columns for the human format.
    pub fn to_text(&self) -> String {
        let n = self.header.len();
        let mut width: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (i, c) in r.iter().enumerate().take(n) {
                width[i] = width[i].max(c.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let parts: Vec<String> =
                cells.iter().enumerate().map(|(i, c)| format!("{c:<w$}", w = width[i])).collect();
            parts.join("  ").trim_end().to_string()
        };
        let mut out = vec![line(self.header.clone())];
        out.extend(self.rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
        out.join("\n")
    }
}

/// What a subcommand produced, in all three formats.
pub struct Output {
    pub json: Value,
    pub human: String,
    pub table: Table,
}

#[cfg(test)]
mod tests {
    use super::*;
    use thetabound::numeric::rat;

    #[test]
    fn surd_decimals() {
        assert_eq!(dec(&QuadSurd::new(-1, 1, 5, 2).unwrap()), "0.6180339887");
        assert_eq!(dec(&QuadSurd::new(0, 1, 5, 5).unwrap()), "0.4472135955");
        assert_eq!(dec(&QuadSurd::from_rational(&rat(1, 3))), "0.3333333333");
    }

    #[test]
    fn float_decimals() {
        assert_eq!(dec_f64(0.0), "0");
        assert_eq!(dec_f64(1.0), "1.000000000");
        assert_eq!(dec_f64(0.25), "0.2500000000");
    }

    #[test]
    fn tables() {
        let mut t = Table::new(&["a", "bb"]);
        t.push(vec!["10".into(), "x,y".into()]);
        assert_eq!(t.to_csv(), "a,bb\n10,\"x,y\"\n");
        assert_eq!(t.to_text(), "a   bb\n10  x,y");
    }
}
