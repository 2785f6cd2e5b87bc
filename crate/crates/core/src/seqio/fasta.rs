use std::collections::HashSet;
use std::io::{BufRead, Write};

use super::SeqError;
use crate::ppn::{encode_bytes, EncodedSequence, PpnError, SanitizePolicy};

/// Line width used when writing sequences.
pub const FASTA_LINE_WIDTH: usize = 60;

/// One unparsed FASTA record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    pub id: String,
    pub description: String,
    pub raw: Vec<u8>,
}

/// Streams records from a buffered reader. LF and CRLF line endings are accepted.
pub struct FastaReader<R> {
    reader: R,
    line: Vec<u8>,
    line_no: usize,
    pending: Option<(String, String, usize)>,
    started: bool,
}

impl<R: BufRead> FastaReader<R> {
    pub fn new(reader: R) -> Self {
        Self {
            reader,
            line: Vec::new(),
            line_no: 0,
            pending: None,
            started: false,
        }
    }

    fn read_line(&mut self) -> Result<bool, SeqError> {
        self.line.clear();
        let n = self.reader.read_until(b'\n', &mut self.line)?;
        if n == 0 {
            return Ok(false);
        }
        self.line_no += 1;
        while matches!(self.line.last(), Some(b'\n' | b'\r')) {
            self.line.pop();
        }
        Ok(true)
    }

    fn parse_header(&self) -> Result<(String, String), SeqError> {
        let text = String::from_utf8_lossy(&self.line[1..]);
        let text = text.trim();
        let (id, description) = match text.split_once(char::is_whitespace) {
            Some((id, rest)) => (id, rest.trim()),
            None => (text, ""),
        };
        if id.is_empty() {
            return Err(SeqError::Malformed {
                line: self.line_no,
                reason: "header without an identifier".into(),
            });
        }
        Ok((id.to_owned(), description.to_owned()))
    }

    fn next_record(&mut self) -> Result<Option<FastaRecord>, SeqError> {
        if !self.started {
            self.started = true;
            loop {
                if !self.read_line()? {
                    return Ok(None);
                }
                if self.line.iter().all(u8::is_ascii_whitespace) {
                    continue;
                }
                if self.line[0] != b'>' {
                    return Err(SeqError::Malformed {
                        line: self.line_no,
                        reason: "sequence data before the first header".into(),
                    });
                }
                let (id, description) = self.parse_header()?;
                self.pending = Some((id, description, self.line_no));
                break;
            }
        }

        let Some((id, description, _)) = self.pending.take() else {
            return Ok(None);
        };
        let mut raw = Vec::new();
        while self.read_line()? {
            if self.line.first() == Some(&b'>') {
                let (next_id, next_desc) = self.parse_header()?;
                self.pending = Some((next_id, next_desc, self.line_no));
                break;
            }
            raw.extend(self.line.iter().filter(|b| !b.is_ascii_whitespace()));
        }
        Ok(Some(FastaRecord {
            id,
            description,
            raw,
        }))
    }
}

impl<R: BufRead> Iterator for FastaReader<R> {
    type Item = Result<FastaRecord, SeqError>;

    fn next(&mut self) -> Option<Self::Item> {
        self.next_record().transpose()
    }
}

/// Encodes one record, attaching its id to any error.
pub fn encode_record(
    record: &FastaRecord,
    policy: SanitizePolicy,
) -> Result<EncodedSequence, SeqError> {
    encode_bytes(&record.id, &record.raw, policy).map_err(|source| match source {
        PpnError::EmptySequence => SeqError::EmptySequence {
            id: record.id.clone(),
        },
        source => SeqError::Record {
            id: record.id.clone(),
            source,
        },
    })
}

/// Reads every record of a FASTA stream in order, rejecting duplicate ids.
pub fn read_fasta<R: BufRead>(
    reader: R,
    policy: SanitizePolicy,
) -> Result<Vec<EncodedSequence>, SeqError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for record in FastaReader::new(reader) {
        let record = record?;
        if !seen.insert(record.id.clone()) {
            return Err(SeqError::DuplicateId(record.id));
        }
        out.push(encode_record(&record, policy)?);
    }
    Ok(out)
}

/// Writes sequences as FASTA with lines wrapped at [`FASTA_LINE_WIDTH`].
pub fn write_fasta<W: Write>(mut writer: W, seqs: &[EncodedSequence]) -> std::io::Result<()> {
    let mut line = Vec::with_capacity(FASTA_LINE_WIDTH + 1);
    for seq in seqs {
        writeln!(writer, ">{}", seq.id())?;
        for chunk in seq.codes().chunks(FASTA_LINE_WIDTH) {
            line.clear();
            line.extend(chunk.iter().map(|b| b.to_ascii()));
            line.push(b'\n');
            writer.write_all(&line)?;
        }
    }
    writer.flush()
}
