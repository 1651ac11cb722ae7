//! Rendering of ring presentations as text, JSON and LaTeX.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::exactalg::latex_name;

/// Relation family: `(i)` for face-ring type relations, `(ii)` for the
/// relations coming from characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::I => "(i)",
            Family::II => "(ii)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub family: Family,
    pub text: String,
    pub latex: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub title: String,
    /// Ambient ring, e.g. `Z[x1, x2]`.
    pub ring: String,
    pub ring_latex: String,
    pub variables: Vec<String>,
    pub relations: Vec<Relation>,
    /// Ranks in cohomological degrees `0, 1, 2, …`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranks: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default)]
    pub conjectural: bool,
}

impl Presentation {
    pub fn relation_texts(&self) -> Vec<&str> {
        self.relations.iter().map(|r| r.text.as_str()).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if self.conjectural {
            s.push_str("CONJECTURAL: the presentation below is not verified.\n");
        }
        let _ = writeln!(s, "{} = {} / I", self.title, self.ring);
        s.push_str("relations:\n");
        for r in &self.relations {
            let _ = writeln!(s, "  {:<5}{}", r.family.label(), r.text);
        }
        if let Some(ranks) = &self.ranks {
            let r: Vec<String> = ranks.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "ranks: {}", r.join(","));
        }
        if !self.basis.is_empty() {
            let _ = writeln!(s, "basis: {}", self.basis.join(", "));
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        if self.conjectural {
            s.push_str("% CONJECTURAL: the presentation below is not verified.\n");
        }
        let _ = writeln!(s, "{} / \\mathcal{{I}}, \\quad \\mathcal{{I}} = \\langle", self.ring_latex);
        s.push_str("\\begin{aligned}\n");
        for r in &self.relations {
            let _ = writeln!(s, "  &\\text{{{}}}\\ {} \\\\", r.family.label(), r.latex);
        }
        s.push_str("\\end{aligned}\n\\rangle\n");
        for n in &self.notes {
            let _ = writeln!(s, "% note: {n}");
        }
        s
    }
}

/// A factor `base^exp` of a relation written in product form.
pub(crate) struct Factor {
    pub text: String,
    pub latex: String,
    pub exp: u32,
}

impl Factor {
    /// `(1 - name)`.
    pub fn one_minus(name: &str) -> Self {
        Factor { text: format!("(1 - {name})"), latex: format!("(1 - {})", latex_name(name)), exp: 1 }
    }

    pub fn var(name: &str) -> Self {
        Factor { text: name.to_string(), latex: latex_name(name), exp: 1 }
    }

    pub fn pow(mut self, exp: u32) -> Self {
        self.exp = exp;
        self
    }
}

/// Text and LaTeX of a product of factors; the empty product is `1`.
pub(crate) fn product(factors: &[Factor]) -> (String, String) {
    let fs: Vec<&Factor> = factors.iter().filter(|f| f.exp > 0).collect();
    if fs.is_empty() {
        return ("1".into(), "1".into());
    }
    let text = fs
        .iter()
        .map(|f| if f.exp == 1 { f.text.clone() } else { format!("{}^{}", f.text, f.exp) })
        .collect::<Vec<_>>()
        .join("*");
    let latex = fs
        .iter()
        .map(|f| if f.exp == 1 { f.latex.clone() } else { format!("{}^{{{}}}", f.latex, f.exp) })
        .collect::<Vec<_>>()
        .join(" ");
    (text, latex)
}

/// `Z[a, b, …]` in text and LaTeX; `laurent` marks inverted variables.
pub(crate) fn ring_names(coeffs: (&str, &str), vars: &[String], laurent: bool) -> (String, String) {
    let text = if laurent {
        format!("{}[{}]", coeffs.0, vars.iter().map(|v| format!("{v}^±1")).collect::<Vec<_>>().join(", "))
    } else {
        format!("{}[{}]", coeffs.0, vars.join(", "))
    };
    let latex = if laurent {
        format!("{}[{}]", coeffs.1, vars.iter().map(|v| format!("{}^{{\\pm 1}}", latex_name(v))).collect::<Vec<_>>().join(", "))
    } else {
        format!("{}[{}]", coeffs.1, vars.iter().map(|v| latex_name(v)).collect::<Vec<_>>().join(", "))
    };
    (text, latex)
}
