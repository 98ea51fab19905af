//! Line numbers of JSON values, keyed by JSON pointer (`/blocks/m/3`).

use std::collections::HashMap;

pub struct Locator {
    lines: HashMap<String, usize>,
}

impl Locator {
    /// Scans `text`; malformed input yields whatever was recorded before the
    /// error (serde reports the error itself).
    pub fn new(text: &str) -> Self {
        let mut s = Scanner { bytes: text.as_bytes(), pos: 0, line: 1, lines: HashMap::new() };
        let _ = s.value(String::new());
        Locator { lines: s.lines }
    }

    /// The line of the value at `pointer`, falling back to its nearest
    /// recorded ancestor.
    pub fn line(&self, pointer: &str) -> Option<usize> {
        let mut p = pointer.to_string();
        loop {
            if let Some(&l) = self.lines.get(&p) {
                return Some(l);
            }
            match p.rfind('/') {
                Some(i) => p.truncate(i),
                None => return None,
            }
        }
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    lines: HashMap<String, usize>,
}

impl Scanner<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.bump();
        }
    }

    fn string(&mut self) -> Option<String> {
        self.bump();
        let start = self.pos;
        loop {
            match self.bump()? {
                b'\\' => {
                    self.bump()?;
                }
                b'"' => break,
                _ => {}
            }
        }
        let raw = std::str::from_utf8(&self.bytes[start..self.pos - 1]).ok()?;
        Some(serde_json::from_str::<String>(&format!("\"{raw}\"")).unwrap_or_else(|_| raw.to_string()))
    }

    fn value(&mut self, pointer: String) -> Option<()> {
        self.skip_ws();
        self.lines.insert(pointer.clone(), self.line);
        match self.peek()? {
            b'{' => {
                self.bump();
                loop {
                    self.skip_ws();
                    match self.peek()? {
                        b'}' => {
                            self.bump();
                            return Some(());
                        }
                        b',' => {
                            self.bump();
                        }
                        b'"' => {
                            let key = self.string()?;
                            self.skip_ws();
                            if self.bump()? != b':' {
                                return None;
                            }
                            self.value(format!("{pointer}/{key}"))?;
                        }
                        _ => return None,
                    }
                }
            }
            b'[' => {
                self.bump();
                let mut i = 0;
                loop {
                    self.skip_ws();
                    match self.peek()? {
                        b']' => {
                            self.bump();
                            return Some(());
                        }
                        b',' => {
                            self.bump();
                        }
                        _ => {
                            self.value(format!("{pointer}/{i}"))?;
                            i += 1;
                        }
                    }
                }
            }
            b'"' => self.string().map(|_| ()),
            _ => {
                while matches!(self.peek(), Some(c) if !matches!(c, b',' | b']' | b'}' | b' ' | b'\n' | b'\r' | b'\t')) {
                    self.bump();
                }
                Some(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_nested_entries() {
        let text = "{\n  \"a\": 1,\n  \"blocks\": {\n    \"m\": [\n      [0, 1, \"2\"],\n      [1, 0, \"3\"]\n    ]\n  }\n}";
        let l = Locator::new(text);
        assert_eq!(l.line("/a"), Some(2));
        assert_eq!(l.line("/blocks/m/1"), Some(6));
        assert_eq!(l.line("/blocks/m/1/2"), Some(6));
        assert_eq!(l.line("/blocks/missing"), Some(3));
    }
}
