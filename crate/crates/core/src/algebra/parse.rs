use super::{AlgebraError, Element, Word};

/// Parses `element := '0' | term ('+' term)*`, `term := '1' | letter+`.
///
/// `line` and `column` locate the first character of `text` in its source;
/// errors report the position of the offending character. The returned
/// element uses the smallest alphabet holding its letters.
pub(crate) fn parse_element(
    text: &str,
    line: usize,
    column: usize,
) -> Result<Element, AlgebraError> {
    let err = |offset: usize, message: String| AlgebraError::Parse {
        line,
        column: column + offset,
        message,
    };
    let mut words: Vec<Word> = Vec::new();
    let mut current: Vec<u8> = Vec::new();
    let mut term_started = false;
    let mut saw_zero = false;
    let mut saw_one = false;
    let mut terms = 0usize;
    let mut last_offset = 0usize;

    let mut finish = |current: &mut Vec<u8>,
                      term_started: &mut bool,
                      saw_one: &mut bool,
                      saw_zero: &mut bool,
                      offset: usize|
     -> Result<(), AlgebraError> {
        if !*term_started {
            return Err(err(offset, "expected a term".into()));
        }
        if *saw_zero {
            if terms > 0 || !current.is_empty() {
                return Err(err(offset, "'0' must stand alone".into()));
            }
        } else {
            words.push(Word::from_letters(current));
        }
        terms += 1;
        current.clear();
        *term_started = false;
        *saw_one = false;
        Ok(())
    };

    for (offset, ch) in text.chars().enumerate() {
        last_offset = offset;
        match ch {
            c if c.is_whitespace() => {}
            '*' => {
                if current.is_empty() {
                    return Err(err(offset, "'*' must sit between letters".into()));
                }
            }
            'a'..='z' => {
                if saw_one || saw_zero {
                    return Err(err(offset, "letters cannot follow '1' or '0'".into()));
                }
                current.push(ch as u8 - b'a');
                term_started = true;
            }
            '1' => {
                if term_started {
                    return Err(err(offset, "'1' must be a whole term".into()));
                }
                saw_one = true;
                term_started = true;
            }
            '0' => {
                if term_started {
                    return Err(err(offset, "'0' must be a whole term".into()));
                }
                saw_zero = true;
                term_started = true;
            }
            '+' => {
                if saw_zero {
                    return Err(err(offset, "'0' must stand alone".into()));
                }
                finish(
                    &mut current,
                    &mut term_started,
                    &mut saw_one,
                    &mut saw_zero,
                    offset,
                )?;
            }
            c => return Err(err(offset, format!("unexpected character {c:?}"))),
        }
    }
    finish(
        &mut current,
        &mut term_started,
        &mut saw_one,
        &mut saw_zero,
        last_offset + usize::from(!text.is_empty()),
    )?;
    let k = words
        .iter()
        .map(Word::min_alphabet)
        .max()
        .unwrap_or(0)
        .max(1);
    Ok(Element::from_unsorted(words, k))
}
