//! CSV emission and parsing.
//!
//! Output is UTF-8, comma separated, one header line, `\n` line endings and
//! no trailing separator. Reals carry 17 significant digits, which is enough
//! to round-trip every `f64`; they are written positionally for decimal
//! exponents in `-5..=16` and in scientific notation otherwise. A rendered
//! real always contains `.`, `e`, `NaN` or `inf`, so integers and reals stay
//! distinguishable when parsed back.

use std::fmt;
use std::io::Write;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CsvError {
    #[error("row {row} has columns {found:?}, expected {expected:?}")]
    ColumnMismatch {
        row: usize,
        expected: Vec<String>,
        found: Vec<String>,
    },
    #[error("field {0:?} contains a separator or line break")]
    BadField(String),
    #[error("cannot parse {0:?} as a value")]
    BadValue(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
    Flag(bool),
}

impl Value {
    pub fn parse(text: &str) -> Result<Self, CsvError> {
        match text {
            "true" => return Ok(Value::Flag(true)),
            "false" => return Ok(Value::Flag(false)),
            _ => {}
        }
        let bad = || CsvError::BadValue(text.to_string());
        let is_int = !text.is_empty()
            && text
                .strip_prefix('-')
                .unwrap_or(text)
                .bytes()
                .all(|b| b.is_ascii_digit());
        if is_int {
            return text.parse().map(Value::Int).map_err(|_| bad());
        }
        text.parse().map(Value::Real).map_err(|_| bad())
    }

    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Value::Int(i) => Some(i as f64),
            Value::Real(x) => Some(x),
            Value::Flag(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Real(x) => f.write_str(&format_real(*x)),
            Value::Flag(b) => write!(f, "{b}"),
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Flag(b)
    }
}

impl From<i64> for Value {
    fn from(i: i64) -> Self {
        Value::Int(i)
    }
}

impl From<u64> for Value {
    fn from(i: u64) -> Self {
        Value::Int(i as i64)
    }
}

impl From<usize> for Value {
    fn from(i: usize) -> Self {
        Value::Int(i as i64)
    }
}

/// `x` to 17 significant digits with trailing zeros removed.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };

    if (-5..=16).contains(&exp) {
        let point = exp + 1;
        let (int_part, frac_part) = if point <= 0 {
            ("0".to_string(), format!("{}{}", "0".repeat((-point) as usize), digits))
        } else if point as usize >= digits.len() {
            (format!("{}{}", digits, "0".repeat(point as usize - digits.len())), String::new())
        } else {
            (digits[..point as usize].to_string(), digits[point as usize..].to_string())
        };
        let frac_part = if frac_part.is_empty() { "0".to_string() } else { frac_part };
        format!("{sign}{int_part}.{frac_part}")
    } else {
        let (lead, rest) = digits.split_at(1);
        if rest.is_empty() {
            format!("{sign}{lead}e{exp}")
        } else {
            format!("{sign}{lead}.{rest}e{exp}")
        }
    }
}

/// One output row. `trial_index` orders rows; the payload holds the columns
/// that are written.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialRow {
    pub experiment: String,
    pub trial_index: u64,
    pub payload: Vec<(String, Value)>,
}

impl TrialRow {
    pub fn new(experiment: &str, trial_index: u64) -> Self {
        Self {
            experiment: experiment.to_string(),
            trial_index,
            payload: Vec::new(),
        }
    }

    pub fn with(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.payload.push((name.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, name: &str, value: impl Into<Value>) {
        self.payload.push((name.to_string(), value.into()));
    }

    pub fn columns(&self) -> Vec<String> {
        self.payload.iter().map(|(k, _)| k.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.payload.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }
}

fn check_field(text: &str) -> Result<(), CsvError> {
    if text.contains([',', '\n', '\r', '"']) {
        return Err(CsvError::BadField(text.to_string()));
    }
    Ok(())
}

/// Writes `columns` as the header and then every row. Rows must carry exactly
/// these columns in this order.
pub fn emit_table(columns: &[String], rows: &[TrialRow], sink: impl Write) -> Result<(), CsvError> {
    for c in columns {
        check_field(c)?;
    }
    let mut out = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .quote_style(csv::QuoteStyle::Never)
        .from_writer(sink);
    if columns.is_empty() {
        // The csv writer refuses empty records; an empty header is a bare
        // line feed.
        out.flush()?;
        let mut sink = out.into_inner().map_err(|e| e.into_error())?;
        sink.write_all(b"\n")?;
        if let Some(row) = rows.first() {
            return Err(CsvError::ColumnMismatch {
                row: 0,
                expected: Vec::new(),
                found: row.columns(),
            });
        }
        return Ok(());
    }
    out.write_record(columns)?;
    for (i, row) in rows.iter().enumerate() {
        let matches = row.payload.len() == columns.len()
            && row.payload.iter().zip(columns).all(|((k, _), c)| k == c);
        if !matches {
            return Err(CsvError::ColumnMismatch {
                row: i,
                expected: columns.to_vec(),
                found: row.columns(),
            });
        }
        let fields: Vec<String> = row.payload.iter().map(|(_, v)| v.to_string()).collect();
        out.write_record(&fields)?;
    }
    out.flush()?;
    Ok(())
}

/// Header taken from the first row; an empty list writes an empty header.
pub fn emit_csv(rows: &[TrialRow], sink: impl Write) -> Result<(), CsvError> {
    let columns = rows.first().map(TrialRow::columns).unwrap_or_default();
    emit_table(&columns, rows, sink)
}

/// Parsed CSV: the header and typed values.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl CsvTable {
    pub fn column(&self, name: &str) -> Option<Vec<&Value>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| &r[idx]).collect())
    }

    /// Rows as [`TrialRow`]s. The index comes from a `trial` column when
    /// present and from the row position otherwise.
    pub fn into_rows(self, experiment: &str) -> Vec<TrialRow> {
        let trial_col = self.columns.iter().position(|c| c == "trial");
        self.rows
            .into_iter()
            .enumerate()
            .map(|(i, values)| {
                let trial_index = match trial_col.map(|c| &values[c]) {
                    Some(Value::Int(t)) => *t as u64,
                    _ => i as u64,
                };
                TrialRow {
                    experiment: experiment.to_string(),
                    trial_index,
                    payload: self.columns.iter().cloned().zip(values).collect(),
                }
            })
            .collect()
    }
}

pub fn parse_csv(text: &str) -> Result<CsvTable, CsvError> {
    let mut lines = text.splitn(2, '\n');
    let header = lines.next().unwrap_or("");
    if header.is_empty() {
        return Ok(CsvTable {
            columns: Vec::new(),
            rows: Vec::new(),
        });
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_reader(text.as_bytes());
    let columns: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        let values = record.iter().map(Value::parse).collect::<Result<Vec<_>, _>>()?;
        rows.push(values);
    }
    Ok(CsvTable { columns, rows })
}
