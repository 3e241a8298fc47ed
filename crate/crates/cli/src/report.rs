use std::io::{self, Write};

use serde::Serialize;
use squarediagram::dyck::{self, area_above};
use squarediagram::{BoundsRecord, NumericalSemigroup};

use crate::Format;

/// Summary of one semigroup. The JSON form carries exactly the serialized
/// fields below, in this order.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub genus: u32,
    pub conductor: u32,
    pub symmetric: bool,
    pub weight: u64,
    pub path: String,
    pub gaps: Vec<u32>,
    #[serde(skip)]
    pub generators: Option<Vec<u64>>,
    #[serde(skip)]
    pub lambda: Vec<u32>,
    #[serde(skip)]
    pub partial_genus: Vec<u32>,
}

impl Report {
    pub fn new(s: &NumericalSemigroup, generators: Option<&[u64]>) -> Self {
        let path = dyck::tau(s);
        let profile = s.profile();
        debug_assert_eq!(area_above(&path), profile.weight);
        Self {
            genus: s.genus(),
            conductor: s.conductor(),
            symmetric: s.is_symmetric(),
            weight: profile.weight,
            path: path.to_string(),
            gaps: profile.gaps,
            generators: generators.map(<[u64]>::to_vec),
            lambda: profile.lambda,
            partial_genus: profile.partial_genus,
        }
    }

    pub fn write(&self, out: &mut dyn Write, format: Format) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer(&mut *out, self)?;
                writeln!(out)
            }
            Format::Text => self.write_text(out),
        }
    }

    fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "gaps:{}", join(&self.gaps))?;
        if let Some(gens) = &self.generators {
            writeln!(out, "generators:{}", join(gens))?;
        }
        writeln!(out, "genus: {}", self.genus)?;
        writeln!(out, "conductor: {}", self.conductor)?;
        writeln!(out, "symmetric: {}", self.symmetric)?;
        writeln!(out, "weight: {}", self.weight)?;
        writeln!(out, "path:{}", prefixed(&self.path))?;
        writeln!(out)?;
        writeln!(out, "{:>4} {:>7} {:>5}", "i", "lambda", "g(i)")?;
        for (i, (l, pg)) in self.lambda.iter().zip(&self.partial_genus).enumerate() {
            writeln!(out, "{i:>4} {l:>7} {pg:>5}")?;
        }
        Ok(())
    }
}

/// `" a, b, c"`, or empty for an empty list.
fn join<T: ToString>(xs: &[T]) -> String {
    prefixed(&xs.iter().map(T::to_string).collect::<Vec<_>>().join(", "))
}

fn prefixed(s: &str) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!(" {s}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub genus: u32,
    pub total: u64,
    pub symmetric: u64,
    pub catalan_bound: u64,
    pub central_binomial_bound: u64,
    pub total_within_catalan: bool,
    pub symmetric_within_central_binomial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_total: Option<u64>,
}

impl CensusRow {
    pub fn new(record: BoundsRecord, oracle_total: Option<u64>) -> Self {
        Self {
            genus: record.genus,
            total: record.total_count,
            symmetric: record.symmetric_count,
            catalan_bound: record.catalan_bound,
            central_binomial_bound: record.central_binomial_bound,
            total_within_catalan: record.total_within_catalan(),
            symmetric_within_central_binomial: record.symmetric_within_central_binomial(),
            oracle_total,
        }
    }

    fn oracle_ok(&self) -> Option<bool> {
        self.oracle_total.map(|o| o == self.total)
    }

    pub fn passed(&self) -> bool {
        self.total_within_catalan
            && self.symmetric_within_central_binomial
            && self.oracle_ok().unwrap_or(true)
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn write_census(rows: &[CensusRow], out: &mut dyn Write, format: Format) -> io::Result<()> {
    if format == Format::Json {
        serde_json::to_writer(&mut *out, rows)?;
        return writeln!(out);
    }
    writeln!(
        out,
        "{:>5} {:>10} {:>9} {:>16} {:>16} {:>6} {:>6} {:>6}",
        "genus", "total", "symmetric", "catalan", "central_binom", "bound1", "bound2", "oracle"
    )?;
    for r in rows {
        let oracle = r.oracle_ok().map_or("-", verdict);
        writeln!(
            out,
            "{:>5} {:>10} {:>9} {:>16} {:>16} {:>6} {:>6} {:>6}",
            r.genus,
            r.total,
            r.symmetric,
            r.catalan_bound,
            r.central_binomial_bound,
            verdict(r.total_within_catalan),
            verdict(r.symmetric_within_central_binomial),
            oracle
        )?;
    }
    Ok(())
}
