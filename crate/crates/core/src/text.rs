//! Two-column text serialization: one `symbol<TAB>value` entry per line.
//!
//! Parsing has the same semantics as [`Frab::from_pairs`]: repeated symbols
//! are summed in file order and zero totals dropped. Rendering sorts symbols
//! by byte order and writes each value in its shortest round-trip form, so
//! `parse(render(f)) == f` holds exactly.

use crate::error::{Error, Result};
use crate::format::shortest;
use crate::frab::Frab;
use crate::symbol::{check_finite, Symbol};

pub fn parse_frab_text(text: &str) -> Result<Frab> {
    let mut pairs = Vec::new();
    for (index, line) in text.split('\n').enumerate() {
        let line_no = index + 1;
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.trim().is_empty() {
            continue;
        }
        let (name, value) = line
            .split_once('\t')
            .ok_or_else(|| Error::Parse("expected symbol<TAB>value".into()).at_line(line_no))?;
        if value.contains('\t') {
            return Err(Error::Parse("more than one TAB".into()).at_line(line_no));
        }
        let symbol = Symbol::new(name).map_err(|e| e.at_line(line_no))?;
        let value = value.trim();
        let value: f64 = value
            .parse()
            .map_err(|_| Error::Parse(format!("invalid number {value:?}")).at_line(line_no))?;
        check_finite(value).map_err(|e| e.at_line(line_no))?;
        pairs.push((symbol, value));
    }
    Frab::accumulate(pairs)
}

/// Symbols containing a TAB or newline cannot be read back; such frabs only
/// arise from the library API, never from parsed input.
pub fn render_frab_text(f: &Frab) -> String {
    let mut out = String::new();
    for (symbol, value) in f.sorted_entries() {
        out.push_str(symbol.as_str());
        out.push('\t');
        out.push_str(&shortest(value));
        out.push('\n');
    }
    out
}
