use super::word::{format_word, gen_letter, Word};
use super::FpError;
use serde::{Deserialize, Serialize};

/// A finitely presented group `⟨names | relators⟩`.
///
/// Relators are stored freely reduced (the "raw" form); the cyclically
/// reduced forms used by coset enumeration are derived on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

/// On-disk form: `{"gens": [...], "relators": ["a^12", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub gens: Vec<String>,
    pub relators: Vec<String>,
}

impl Presentation {
    /// Trivial relators are dropped; letters must name existing generators.
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self, FpError> {
        for r in &relators {
            if let Some(g) = r.max_gen() {
                if g >= names.len() {
                    return Err(FpError::LetterOutOfRange {
                        index: g,
                        ngens: names.len(),
                    });
                }
            }
        }
        let relators = relators.into_iter().filter(|r| !r.is_empty()).collect();
        Ok(Presentation { names, relators })
    }

    /// Parses relator strings against the given generator names.
    pub fn parse(names: &[&str], relators: &[&str]) -> Result<Self, FpError> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let rels = relators
            .iter()
            .map(|s| parse_word(s, &names))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(names, rels)
    }

    pub fn from_json(s: &str) -> Result<Self, FpError> {
        let doc: PresentationDoc =
            serde_json::from_str(s).map_err(|e| FpError::Json(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn from_doc(doc: &PresentationDoc) -> Result<Self, FpError> {
        let names: Vec<&str> = doc.gens.iter().map(String::as_str).collect();
        let rels: Vec<&str> = doc.relators.iter().map(String::as_str).collect();
        Self::parse(&names, &rels)
    }

    pub fn to_doc(&self) -> PresentationDoc {
        PresentationDoc {
            gens: self.names.clone(),
            relators: self.relators.iter().map(|r| self.format(r)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("presentation serializes")
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Relators after cyclic reduction, empties removed.
    pub fn cyclic_relators(&self) -> Vec<Word> {
        self.relators
            .iter()
            .map(Word::cyclic_reduce)
            .filter(|w| !w.is_empty())
            .collect()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn word(&self, s: &str) -> Result<Word, FpError> {
        parse_word(s, &self.names)
    }

    pub fn format(&self, w: &Word) -> String {
        format_word(w, &self.names)
    }

    /// Same generators, extra relators.
    pub fn with_relators(&self, extra: impl IntoIterator<Item = Word>) -> Result<Self, FpError> {
        let mut rels = self.relators.clone();
        rels.extend(extra);
        Presentation::new(self.names.clone(), rels)
    }

    /// Exponent-sum matrix (rows = relators, columns = generators).
    pub fn relation_matrix(&self) -> Vec<Vec<i128>> {
        self.relators
            .iter()
            .map(|r| r.exponent_sums(self.ngens()))
            .collect()
    }
}

/// Parses the word syntax `a`, `a^k`, `u*v`, `(w)`, `w^g` (= g⁻¹wg), `[u,v]` and `1`.
pub fn parse_word(s: &str, names: &[String]) -> Result<Word, FpError> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
        src: s,
        names,
    };
    let w = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(w)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    src: &'a str,
    names: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> FpError {
        FpError::Parse {
            input: self.src.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Word, FpError> {
        let mut w = self.term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            w = w.mul(&self.term()?);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word, FpError> {
        let mut w = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(c) if c == b'-' || c.is_ascii_digit() => {
                    let k = self.int()?;
                    w = w.pow(k);
                }
                _ => {
                    let g = self.atom()?;
                    w = g.inv().mul(&w).mul(&g);
                }
            }
        }
        Ok(w)
    }

    fn int(&mut self) -> Result<i64, FpError> {
        self.skip_ws();
        let start = self.pos;
        if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected integer"))
    }

    fn atom(&mut self) -> Result<Word, FpError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.expr()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.expr()?;
                self.expect(b',')?;
                let v = self.expr()?;
                self.expect(b']')?;
                Ok(u.commutator(&v))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Word::new([gen_letter(i)])),
                    None => Err(FpError::UnknownGenerator(name.to_string())),
                }
            }
            _ => Err(self.err("expected generator, '1', '(' or '['")),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), FpError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }
}
