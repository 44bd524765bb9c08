//! Tab-separated reports with a verdict.

use std::fmt;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl Verdict {
    /// Process exit status: a FAIL is 1, everything else 0.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Fail => 1,
            _ => 0,
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
    pub digest: Option<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, header: &[&str]) -> Report {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
            verdict: Verdict::Pass,
            digest: None,
        }
    }

    pub fn input(mut self, s: impl Into<String>) -> Report {
        self.inputs.push(s.into());
        self
    }

    pub fn push<I, S>(&mut self, row: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        let row: Vec<String> = row.into_iter().map(|s| s.to_string()).collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Values of one column.
    pub fn column(&self, name: &str) -> Vec<&str> {
        match self.header.iter().position(|h| h == name) {
            Some(i) => self.rows.iter().map(|r| r[i].as_str()).collect(),
            None => Vec::new(),
        }
    }

    pub fn summary(&self) -> String {
        format!("{}: {}", self.command, self.verdict)
    }

    /// The TSV text. Identical for identical results.
    pub fn render(&self) -> String {
        let mut s = format!("# projlink {VERSION}\n# command: {}\n", self.command);
        for i in &self.inputs {
            s.push_str(&format!("# input: {i}\n"));
        }
        if let Some(d) = &self.digest {
            s.push_str(&format!("# catalog: sha256:{d}\n"));
        }
        s.push_str(&self.header.join("\t"));
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.join("\t"));
            s.push('\n');
        }
        for n in &self.notes {
            s.push_str(&format!("# note: {n}\n"));
        }
        s.push_str(&format!("# verdict: {}\n", self.verdict));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_layout() {
        let mut r = Report::new("demo", &["a", "b"]).input("x");
        r.push(["1", "2"]);
        r.digest = Some("ab".into());
        let text = r.render();
        assert!(text.starts_with("# projlink "));
        assert!(text.contains("# catalog: sha256:ab\na\tb\n1\t2\n# verdict: PASS\n"));
        assert_eq!(r.column("b"), vec!["2"]);
    }
}
