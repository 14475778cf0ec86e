use lyubeznik_core::verify::CheckReport;

use crate::GraphResult;

/// Rows `i`, columns `j`, zeros as `·`.
pub fn render_table(entries: &[Vec<usize>]) -> String {
    let width =
        entries.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1).max(entries.len().to_string().len());
    let mut out = format!("{:>w$} |", "", w = width);
    for j in 0..entries.len() {
        out.push_str(&format!(" {j:>width$}"));
    }
    out.push('\n');
    out.push_str(&"-".repeat(width + 2 + entries.len() * (width + 1)));
    out.push('\n');
    for (i, row) in entries.iter().enumerate() {
        out.push_str(&format!("{i:>width$} |"));
        for &v in row {
            if v == 0 {
                out.push_str(&format!(" {:>width$}", "·"));
            } else {
                out.push_str(&format!(" {v:>width$}"));
            }
        }
        out.push('\n');
    }
    out
}

/// Undirected DOT graph; vertices are labelled by their minimal primes.
pub fn render_dot(graph: &GraphResult) -> String {
    let mut out = String::from("graph hochster_huneke {\n");
    for (k, v) in graph.vertices.iter().enumerate() {
        out.push_str(&format!("  p{k} [label=\"({})\"];\n", v.join(", ")));
    }
    for [a, b] in &graph.edges {
        out.push_str(&format!("  p{a} -- p{b};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn render_reports(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {} ({} instances)\n", r.name, r.instances_run));
        for f in r.failures.iter().take(5) {
            out.push_str(&format!("    {}: expected {}, got {}\n", f.instance, f.expected, f.actual));
        }
        if r.failures.len() > 5 {
            out.push_str(&format!("    ... {} more\n", r.failures.len() - 5));
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} checks, {failed} failed\n", reports.len()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeros_render_as_dots() {
        assert_eq!(render_table(&[vec![0, 0], vec![0, 1]]), "  | 0 1\n-------\n0 | · ·\n1 | · 1\n");
    }

    #[test]
    fn dot_is_undirected() {
        let g = GraphResult {
            vertices: vec![vec!["x".into()], vec!["y".into()]],
            edges: vec![[0, 1]],
            components: vec![0, 0],
            component_count: 1,
        };
        let dot = render_dot(&g);
        assert!(dot.contains("p0 -- p1;"));
        assert!(!dot.contains("->"));
    }
}
