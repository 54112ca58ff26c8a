use std::io::Read;

use lyndon_lz::Text;

use crate::args::InputArgs;
use crate::Failure;

pub fn read_input(args: &InputArgs) -> Result<Text, Failure> {
    let (mut bytes, from_stdin) = match (&args.text, &args.file) {
        (Some(t), _) => (t.as_bytes().to_vec(), false),
        (None, Some(path)) => {
            let bytes = std::fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            (bytes, false)
        }
        (None, None) => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Failure::Usage(format!("standard input: {e}")))?;
            (buf, true)
        }
    };
    if args.strip_newline || (from_stdin && !args.keep_newline) {
        strip_newline(&mut bytes);
    }
    Ok(Text::new(bytes))
}

fn strip_newline(bytes: &mut Vec<u8>) {
    if bytes.last() == Some(&b'\n') {
        bytes.pop();
        if bytes.last() == Some(&b'\r') {
            bytes.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::strip_newline;

    #[test]
    fn strips_one_terminator() {
        for (input, want) in [
            ("ab\n", "ab"),
            ("ab\r\n", "ab"),
            ("ab\n\n", "ab\n"),
            ("ab", "ab"),
            ("", ""),
        ] {
            let mut v = input.as_bytes().to_vec();
            strip_newline(&mut v);
            assert_eq!(v, want.as_bytes());
        }
    }
}
