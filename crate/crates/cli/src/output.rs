//! Serializable outputs of the subcommands.

use std::fmt;

use serde::{Deserialize, Serialize};

use qblock::charring::CharacterJson;
use qblock::io::WeightFile;
use qblock::linkage::WitnessJson;

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct LeviOut {
    pub size: usize,
    pub class: String,
    pub ell: usize,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct MoveOut {
    pub root: String,
    pub flag: String,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ReduceOut {
    pub input: WeightFile,
    pub class_signature: String,
    pub levi: Vec<LeviOut>,
    pub shape: Vec<usize>,
    pub reduced: WeightFile,
    pub moves: Vec<MoveOut>,
    pub atypical_moves: usize,
    pub notes: Vec<String>,
    pub parity_undetermined: bool,
}

impl fmt::Display for ReduceOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "signature: {}", self.class_signature)?;
        let shape: Vec<String> = self.shape.iter().map(|s| format!("q({s})")).collect();
        writeln!(f, "levi: {}", shape.join(" x "))?;
        for b in &self.levi {
            writeln!(f, "  q({}) {} ell={}", b.size, b.class, b.ell)?;
        }
        writeln!(f, "reduced: ({})", self.reduced.coords.join(", "))?;
        writeln!(f, "moves: {} ({} atypical)", self.moves.len(), self.atypical_moves)?;
        for m in &self.moves {
            writeln!(f, "  {} {}", m.root, m.flag)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        write!(f, "parity undetermined: {}", self.parity_undetermined)
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct LinkedOut {
    pub relation: String,
    pub linked: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl fmt::Display for LinkedOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.relation, self.linked)?;
        if let Some(w) = &self.witness {
            let imgs: Vec<String> = w.w.iter().map(|v| v.to_string()).collect();
            let pairs: Vec<String> = w.pairs.iter().map(|p| format!("(e{}-e{}, {})", p.i, p.j, p.k)).collect();
            write!(f, "\nw: [{}]\npairs: [{}]", imgs.join(", "), pairs.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct AtypOut {
    pub atypicality: usize,
    pub matching: Vec<String>,
}

impl fmt::Display for AtypOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "atypicality: {}\nroots: [{}]", self.atypicality, self.matching.join(", "))
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct WtOut {
    /// (index a, coefficient of ϵ_a), sorted by index.
    pub terms: Vec<(i64, i64)>,
    pub text: String,
}

impl fmt::Display for WtOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text)
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct CharOut {
    pub character: CharacterJson,
    pub lines: Vec<String>,
}

impl fmt::Display for CharOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lines.join("\n"))?;
        match self.character.depth {
            Some(d) => write!(f, "\n(exact to height {d} below ({}))", self.character.anchor.join(", ")),
            None => write!(f, "\n(exact)"),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct FlagTerm {
    pub weight: Vec<String>,
    pub multiplicity: i64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct VerifyOut {
    pub holds: bool,
    pub flag: Vec<FlagTerm>,
    pub pieri_flag: Vec<FlagTerm>,
    pub expected: CharOut,
}

impl fmt::Display for VerifyOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "identity holds: {}", self.holds)?;
        writeln!(f, "flag:")?;
        for t in &self.flag {
            writeln!(f, "  {} K({})", t.multiplicity, t.weight.join(", "))?;
        }
        writeln!(f, "prediction:")?;
        write!(f, "{}", self.expected)
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct NeighbourOut {
    pub weight: WeightFile,
    pub k: i64,
}

impl fmt::Display for NeighbourOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})\nk = {}", self.weight.coords.join(", "), self.k)
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ChartOut {
    pub window: usize,
    /// Chart index i and the coordinates of λⁱ.
    pub weights: Vec<(i64, Vec<String>)>,
    pub decomposition: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i64>>,
    pub edges: Vec<(i64, i64)>,
    pub boundary: Vec<i64>,
}

fn matrix(f: &mut fmt::Formatter<'_>, name: &str, m: &[Vec<i64>]) -> fmt::Result {
    writeln!(f, "{name}:")?;
    for row in m {
        let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(f, "  {}", r.join(" "))?;
    }
    Ok(())
}

impl fmt::Display for ChartOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in &self.weights {
            writeln!(f, "{i:>3}: ({})", w.join(", "))?;
        }
        matrix(f, "D", &self.decomposition)?;
        matrix(f, "C", &self.cartan)?;
        let e: Vec<String> = self.edges.iter().map(|(a, b)| format!("({a},{b})")).collect();
        writeln!(f, "edges: {}", e.join(" "))?;
        let b: Vec<String> = self.boundary.iter().map(|x| x.to_string()).collect();
        write!(f, "boundary: {}", b.join(" "))
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct GlOut {
    pub ell: usize,
    pub coords: Vec<i64>,
    pub wt: String,
    pub atypicality: usize,
}

impl fmt::Display for GlOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "({} | {})\nwt: {}\natypicality: {}",
            part(&self.coords[..self.ell]),
            part(&self.coords[self.ell..]),
            self.wt,
            self.atypicality
        )
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct RadicalOut {
    pub dims: Vec<usize>,
    pub layers: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct SubmodulesOut {
    pub vertex: i64,
    pub boundary: bool,
    pub projective: Vec<String>,
    pub submodules: Vec<Vec<String>>,
    pub socle: Vec<String>,
    pub radical_squared: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ZigzagOut {
    pub window: usize,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical: Option<RadicalOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub submodules: Option<SubmodulesOut>,
}

fn span(v: &[String]) -> String {
    format!("span{{{}}}", v.join(", "))
}

impl fmt::Display for ZigzagOut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# basis ({})", self.dim)?;
        write!(f, "{}", self.basis.join("\n"))?;
        if let Some(t) = &self.table {
            write!(f, "\n# table\n{}", t.join("\n"))?;
        }
        if let Some(r) = &self.radical {
            write!(f, "\n# radical")?;
            for (k, l) in r.layers.iter().enumerate() {
                write!(f, "\nrad^{} ({}): {}", k + 1, r.dims[k], span(l))?;
            }
        }
        if let Some(s) = &self.submodules {
            write!(f, "\n# submodules of P({})", s.vertex)?;
            if s.boundary {
                write!(f, " (boundary vertex)")?;
            }
            write!(f, "\nP: {}", span(&s.projective))?;
            for m in &s.submodules {
                write!(f, "\n  {}", span(m))?;
            }
            write!(f, "\nsocle: {}\nrad^2: {}", span(&s.socle), span(&s.radical_squared))?;
        }
        Ok(())
    }
}
