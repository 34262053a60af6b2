//! Tabular catalog renderings.

use std::io::Write;

use dynkin_core::catalog::{Catalog, CatalogEntry};

use crate::report::NOT_SYMMETRIZABLE;

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn blocks(e: &CatalogEntry, item: &str, sep: &str) -> String {
    e.orbit_blocks
        .to_one_based()
        .iter()
        .map(|b| format!("{{{}}}", join(b, item)))
        .collect::<Vec<_>>()
        .join(sep)
}

/// One row per entry, columns as in the JSON records. Matrix rows are `;`
/// separated with `,` between entries; absent values are empty fields.
pub fn write_tsv(cat: &Catalog, w: &mut dyn Write) -> std::io::Result<()> {
    writeln!(
        w,
        "canonical_id\trank\tmatrix\tcompact\tsymmetrizable\tsymmetrizer\troot_lengths\torbit_blocks\torbit_semantics\tdual_id"
    )?;
    for e in cat.entries() {
        let matrix: Vec<String> = e.matrix.rows().iter().map(|r| join(r, ",")).collect();
        writeln!(
            w,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            e.canonical_id,
            e.rank,
            matrix.join(";"),
            e.compact,
            e.symmetrizable,
            e.symmetrizer.as_ref().map(|s| join(s.d(), ",")).unwrap_or_default(),
            e.root_lengths.map(|r| r.to_string()).unwrap_or_default(),
            blocks(e, ",", " "),
            e.orbit_semantics,
            e.dual_id,
        )?;
    }
    Ok(())
}

/// A `longtable` (needs the `longtable` and `amsmath` packages) with columns
/// index, matrix, `diag(d)` or `N.S.`, and orbit blocks. The orbit cell is
/// blank for non-symmetrizable entries.
pub fn write_latex(cat: &Catalog, w: &mut dyn Write) -> std::io::Result<()> {
    writeln!(w, "% dynkin-catalog/1, {} entries, vertices 1-based", cat.len())?;
    writeln!(w, "\\begin{{longtable}}{{rlll}}")?;
    writeln!(w, "\\hline")?;
    writeln!(w, "No. & Matrix & $D$ & Orbits \\\\")?;
    writeln!(w, "\\hline")?;
    writeln!(w, "\\endhead")?;
    for (k, e) in cat.entries().iter().enumerate() {
        let rows: Vec<String> = e.matrix.rows().iter().map(|r| join(r, " & ")).collect();
        let matrix = format!(
            "$\\left(\\begin{{smallmatrix}} {} \\end{{smallmatrix}}\\right)$",
            rows.join(" \\\\ ")
        );
        let (d, orbits) = match &e.symmetrizer {
            Some(s) => (
                format!("$\\mathrm{{diag}}({})$", join(s.d(), ",")),
                format!("$\\{{{}\\}}$", {
                    let inner: Vec<String> = e
                        .orbit_blocks
                        .to_one_based()
                        .iter()
                        .map(|b| format!("\\{{{}\\}}", join(b, ",")))
                        .collect();
                    inner.join(",")
                }),
            ),
            None => (NOT_SYMMETRIZABLE.to_string(), String::new()),
        };
        writeln!(w, "{} & {matrix} & {d} & {orbits} \\\\", k + 1)?;
    }
    writeln!(w, "\\hline")?;
    writeln!(w, "\\end{{longtable}}")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog() -> Catalog {
        Catalog::enumerate(3, 3, 0).unwrap()
    }

    fn render(f: fn(&Catalog, &mut dyn Write) -> std::io::Result<()>) -> String {
        let mut buf = Vec::new();
        f(&catalog(), &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn tsv_columns() {
        let out = render(write_tsv);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 124);
        assert!(lines.iter().all(|l| l.split('\t').count() == 10));
        assert!(lines[1].starts_with("3-001\t3\t"));
        // structured output keeps the partition of non-symmetrizable entries
        let ns = lines.iter().find(|l| l.contains("\tfalse\t\t\t")).unwrap();
        assert!(ns.contains("\tunverified\t"));
        assert!(ns.contains('{'));
    }

    #[test]
    fn latex_rows() {
        let out = render(write_latex);
        let rows: Vec<&str> = out.lines().filter(|l| l.contains("smallmatrix")).collect();
        assert_eq!(rows.len(), 123);
        assert!(rows[0].starts_with("1 & "));
        let ns = rows.iter().find(|l| l.contains("N.S.")).unwrap();
        assert!(ns.ends_with("& N.S. &  \\\\"), "{ns}");
        let sym = rows.iter().find(|l| l.contains("diag")).unwrap();
        assert!(sym.contains("\\{\\{"), "{sym}");
    }
}
