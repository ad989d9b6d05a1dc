//! Deterministic preprocessing of raw instance text into scoreable tokens.
//!
//! The pipeline is intentionally lossy: lowercase, drop URLs, split on
//! anything that is not a letter. Only words composed of letters survive,
//! in any alphabet (Latin, Arabic, ...). There is no stemming, stopword
//! removal or elongation normalization; lexicons list canonical forms and
//! matching is exact.

use alloc::string::String;
use alloc::vec::Vec;

/// An ordered list of lowercase, letters-only tokens.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TokenList {
    tokens: Vec<String>,
}

impl TokenList {
    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, String> {
        self.tokens.iter()
    }
}

impl From<TokenList> for Vec<String> {
    fn from(list: TokenList) -> Self {
        list.tokens
    }
}

/// Whether a whitespace-delimited chunk is a URL: `scheme://...` or a
/// `www.`-prefixed run. Expects lowercased input.
fn is_url(chunk: &str) -> bool {
    if chunk.starts_with("www.") {
        return true;
    }
    match chunk.find("://") {
        Some(pos) if pos > 0 => {
            let scheme = &chunk[..pos];
            scheme.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && scheme
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '.' | '-'))
        }
        _ => false,
    }
}

/// Tokenize raw text: lowercase, remove URL chunks, split on non-letter
/// characters. Tokens containing digits can never be emitted since digits
/// act as separators. Letters with no lowercase mapping (mathematical
/// capitals and the like) also act as separators, so no token ever carries
/// an uppercase character. Empty or all-symbol input yields an empty list.
pub fn tokenize(text: &str) -> TokenList {
    let mut tokens = Vec::new();
    for chunk in text.split_whitespace() {
        let lower = chunk.to_lowercase();
        if is_url(&lower) {
            continue;
        }
        for tok in lower.split(|c: char| !c.is_alphabetic() || c.is_uppercase()) {
            if !tok.is_empty() {
                tokens.push(String::from(tok));
            }
        }
    }
    TokenList { tokens }
}
