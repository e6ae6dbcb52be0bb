//! Substitution (Lindenmayer) words and subword complexity.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

/// Errors from the word engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordsError {
    #[error("UnknownSymbol: {0:?} is not in the rule alphabet")]
    UnknownSymbol(char),
    #[error("LengthExceeded: window length {n} is outside 1..={len}")]
    LengthExceeded { n: usize, len: usize },
    #[error("WindowUndersampled: max_n {max_n} needs a word of length at least {needed}")]
    WindowUndersampled { max_n: usize, needed: usize },
    #[error("InvalidRule: {0}")]
    InvalidRule(String),
}

/// A parallel rewriting system over a small alphabet of single characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionRule {
    alphabet: Vec<char>,
    rules: BTreeMap<char, String>,
}

impl SubstitutionRule {
    /// Builds a rule set. The alphabet is the list of rule heads, in the
    /// order given; it must have 2 to 16 distinct symbols, and every
    /// replacement must be a non-empty string over that alphabet.
    pub fn new(rules: &[(char, &str)]) -> Result<Self, WordsError> {
        let alphabet: Vec<char> = rules.iter().map(|&(c, _)| c).collect();
        if alphabet.len() < 2 || alphabet.len() > 16 {
            return Err(WordsError::InvalidRule(format!(
                "alphabet must have 2..=16 symbols, got {}",
                alphabet.len()
            )));
        }
        let set: HashSet<char> = alphabet.iter().copied().collect();
        if set.len() != alphabet.len() {
            return Err(WordsError::InvalidRule("duplicate symbol in alphabet".into()));
        }
        let mut map = BTreeMap::new();
        for &(symbol, replacement) in rules {
            if replacement.is_empty() {
                return Err(WordsError::InvalidRule(format!(
                    "empty replacement for {symbol:?}"
                )));
            }
            if let Some(stranger) = replacement.chars().find(|c| !set.contains(c)) {
                return Err(WordsError::InvalidRule(format!(
                    "replacement for {symbol:?} uses {stranger:?}, which is outside the alphabet"
                )));
            }
            map.insert(symbol, replacement.to_string());
        }
        Ok(SubstitutionRule { alphabet, rules: map })
    }

    /// The binary rule `0 -> 01`, `1 -> 0` whose fixed point is the
    /// Fibonacci word.
    pub fn fibonacci() -> Self {
        SubstitutionRule::new(&[('0', "01"), ('1', "0")]).expect("static rule is valid")
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn replacement(&self, symbol: char) -> Option<&str> {
        self.rules.get(&symbol).map(|s| s.as_str())
    }

    /// One parallel rewriting step, truncated to `max_length` symbols.
    fn step(&self, word: &str, max_length: usize) -> (String, bool) {
        let mut out = String::new();
        let mut count = 0usize;
        let mut truncated = false;
        for c in word.chars() {
            let replacement = &self.rules[&c];
            let rep_len = replacement.chars().count();
            if count + rep_len > max_length {
                out.extend(replacement.chars().take(max_length - count));
                truncated = true;
                break;
            }
            out.push_str(replacement);
            count += rep_len;
        }
        (out, truncated)
    }
}

/// A finite word together with a note on how it was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    symbols: String,
    provenance: String,
}

impl Word {
    pub fn new(symbols: impl Into<String>, provenance: impl Into<String>) -> Self {
        Word { symbols: symbols.into(), provenance: provenance.into() }
    }

    /// A word entered directly, e.g. an axiom.
    pub fn literal(symbols: impl Into<String>) -> Self {
        Word::new(symbols, "literal")
    }

    pub fn as_str(&self) -> &str {
        &self.symbols
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.symbols.chars().count()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols)
    }
}

/// Applies the rule map to every symbol of `axiom`, `iterations` times.
///
/// Substitution images of prefixes are prefixes of the full image, so
/// truncating to `max_length` after each step still yields exactly the
/// first `max_length` symbols of the untruncated iterate.
pub fn expand(
    rule: &SubstitutionRule,
    axiom: &Word,
    iterations: usize,
    max_length: usize,
) -> Result<Word, WordsError> {
    assert!(max_length >= 1, "max_length must be at least 1");
    assert!(!axiom.is_empty(), "axiom must be non-empty");
    let known: HashSet<char> = rule.alphabet.iter().copied().collect();
    if let Some(stranger) = axiom.as_str().chars().find(|c| !known.contains(c)) {
        return Err(WordsError::UnknownSymbol(stranger));
    }
    let mut current: String = axiom.as_str().chars().take(max_length).collect();
    let mut truncated = current.chars().count() < axiom.len();
    for _ in 0..iterations {
        let (next, cut) = rule.step(&current, max_length);
        truncated |= cut;
        current = next;
    }
    let mut provenance = format!(
        "axiom {:?} expanded {} time(s) under {}",
        axiom.as_str(),
        iterations,
        describe_rule(rule)
    );
    if truncated {
        provenance.push_str(&format!(", truncated to {max_length} symbols"));
    }
    Ok(Word::new(current, provenance))
}

fn describe_rule(rule: &SubstitutionRule) -> String {
    let body: Vec<String> = rule
        .alphabet
        .iter()
        .map(|&c| format!("{}->{}", c, rule.rules[&c]))
        .collect();
    format!("{{{}}}", body.join(", "))
}

/// The first `length` symbols of the Fibonacci word, built by the
/// concatenation recurrence from "0" and "01".
pub fn fibonacci_word(length: usize) -> Word {
    assert!(length >= 1, "length must be at least 1");
    let mut prev = String::from("0");
    let mut current = String::from("01");
    if length == 1 {
        return Word::new("0", "fibonacci recurrence, 1 symbol");
    }
    while current.len() < length {
        let next = format!("{current}{prev}");
        prev = current;
        current = next;
    }
    Word::new(
        current[..length].to_string(),
        format!("fibonacci recurrence, {length} symbols"),
    )
}

/// The n-th string of the Fibonacci concatenation recurrence, `S_0 = "0"`,
/// `S_1 = "01"`, `S_{n+2} = S_{n+1} S_n`.
pub fn fibonacci_step(n: usize) -> Word {
    let mut prev = String::from("0");
    let mut current = String::from("01");
    if n == 0 {
        return Word::new(prev, "fibonacci recurrence step 0");
    }
    for _ in 1..n {
        let next = format!("{current}{prev}");
        prev = current;
        current = next;
    }
    Word::new(current, format!("fibonacci recurrence step {n}"))
}

/// Number of distinct length-`n` substrings of `word`.
pub fn complexity(word: &Word, n: usize) -> Result<usize, WordsError> {
    let symbols: Vec<char> = word.as_str().chars().collect();
    if n == 0 || n > symbols.len() {
        return Err(WordsError::LengthExceeded { n, len: symbols.len() });
    }
    let mut seen: HashSet<&[char]> = HashSet::new();
    for window in symbols.windows(n) {
        seen.insert(window);
    }
    Ok(seen.len())
}

/// Verdict of the bounded-complexity screen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexityVerdict {
    /// Some `sigma(n) <= n` was observed, which a truly aperiodic word
    /// never shows.
    PeriodicConsistent,
    /// Every observed `sigma(n)` is at least `n + 1`.
    AperiodicConsistent,
}

/// Subword-complexity table for `n = 1..=max_n` with the bounded-growth
/// verdict. A finite prefix can only ever give evidence, not proof, and the
/// report says so when displayed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityReport {
    pub rows: Vec<(usize, usize)>,
    pub verdict: ComplexityVerdict,
    /// First window length at which `sigma(n) <= n`, if any.
    pub flagged_n: Option<usize>,
}

impl fmt::Display for ComplexityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# n\tsigma")?;
        for (n, sigma) in &self.rows {
            writeln!(f, "{n}\t{sigma}")?;
        }
        match self.verdict {
            ComplexityVerdict::AperiodicConsistent => writeln!(
                f,
                "# aperiodic-consistent on this finite prefix (sigma(n) >= n+1 throughout)"
            ),
            ComplexityVerdict::PeriodicConsistent => writeln!(
                f,
                "# periodic-consistent on this finite prefix (sigma({}) <= {})",
                self.flagged_n.unwrap_or(0),
                self.flagged_n.unwrap_or(0),
            ),
        }
    }
}

/// Screens a word prefix with the bounded-complexity criterion: a word with
/// `sigma(n) <= n` for some `n` is eventually periodic, while aperiodic
/// words satisfy `sigma(n) >= n + 1` for every `n`.
///
/// Requires `max_n <= len - max_n` so each window length is well sampled.
pub fn classify_morse_hedlund(
    word: &Word,
    max_n: usize,
) -> Result<ComplexityReport, WordsError> {
    assert!(max_n >= 1, "max_n must be at least 1");
    let len = word.len();
    if max_n > len.saturating_sub(max_n) {
        return Err(WordsError::WindowUndersampled { max_n, needed: 2 * max_n });
    }
    let mut rows = Vec::with_capacity(max_n);
    let mut flagged_n = None;
    for n in 1..=max_n {
        let sigma = complexity(word, n)?;
        rows.push((n, sigma));
        if flagged_n.is_none() && sigma <= n {
            flagged_n = Some(n);
        }
    }
    let verdict = if flagged_n.is_some() {
        ComplexityVerdict::PeriodicConsistent
    } else {
        ComplexityVerdict::AperiodicConsistent
    };
    Ok(ComplexityReport { rows, verdict, flagged_n })
}
