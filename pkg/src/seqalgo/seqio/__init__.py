"""Streaming readers and writers for FASTA, FASTQ and BED.

Readers take a path or any binary stream and yield one record at a time.
Input may use ``\\n`` or ``\\r\\n`` line endings; writers always emit ``\\n``.
"""

from seqalgo.seqio.bed import bed_records, bed_write, format_bed
from seqalgo.seqio.fasta import fasta_records, fasta_write, format_fasta
from seqalgo.seqio.fastq import fastq_records, fastq_write, format_fastq
from seqalgo.seqio.records import BedRecord, SeqRecord

__all__ = [
    "BedRecord",
    "SeqRecord",
    "bed_records",
    "bed_write",
    "fasta_records",
    "fasta_write",
    "fastq_records",
    "fastq_write",
    "format_bed",
    "format_fasta",
    "format_fastq",
]
