# Copyright SDSLIB CONTRIBUTORS 2024

"""
Search reports: per-case counts of every pipeline stage, convertible to pandas DataFrames
"""

from typing import Any, Dict, List, Optional

import pandas as pd
import pydantic

from sdslib.enums import ExistenceStatus
from sdslib.sequence import Subset


class SideCounts(pydantic.BaseModel):
    """
    Stage counts for one side of one content case.
    enumerated is the number of equivalence classes in the candidate space;
    skipped marks a side that was not enumerated (guard or early stop).
    """

    content: str
    enumerated: int = 0
    psd_passed: int = 0
    deduped: int = 0
    skipped: bool = False

    @pydantic.model_validator(mode="after")
    def _check_order(self) -> "SideCounts":
        if not self.deduped <= self.psd_passed:
            raise ValueError(f"deduped {self.deduped} exceeds psd_passed {self.psd_passed}")
        if not self.skipped and self.psd_passed > self.enumerated:
            raise ValueError(f"psd_passed {self.psd_passed} exceeds enumerated {self.enumerated}")
        return self


class CaseReportRow(pydantic.BaseModel):
    """
    Data row for one content case of a search.
    """

    case: int
    a_side: SideCounts
    b_side: SideCounts
    matched_pairs: int = 0
    lifted_witnesses: int = 0
    seconds: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        """
        Converts this row to a dictionary suitable for DataFrame construction
        """
        dict_for_df = {}
        dict_for_df["Case"] = self.case
        dict_for_df["A content"] = self.a_side.content
        dict_for_df["A enumerated"] = self.a_side.enumerated
        dict_for_df["A psd passed"] = self.a_side.psd_passed
        dict_for_df["A deduped"] = self.a_side.deduped
        dict_for_df["B content"] = self.b_side.content
        dict_for_df["B enumerated"] = self.b_side.enumerated
        dict_for_df["B psd passed"] = self.b_side.psd_passed
        dict_for_df["B deduped"] = self.b_side.deduped
        dict_for_df["Pairs"] = self.matched_pairs
        dict_for_df["Lifted"] = self.lifted_witnesses
        dict_for_df["Seconds"] = self.seconds
        return dict_for_df


class SearchReport(pydantic.BaseModel):
    """
    Per-case counts of a two-block search, stored as a list of rows
    and convertible to pandas DataFrames shaped like the usual
    A-sequence, B-sequence and matching-pair tables.
    """

    params: str
    strategy: str
    beta: int
    alpha_d: int
    a_mode: str = "charmed"
    b_mode: str = "bracelet"
    seeded: bool = False
    rows: List[CaseReportRow] = []
    total_seconds: float = 0.0
    notes: List[str] = []

    def to_dataframe(self) -> pd.DataFrame:
        """
        Convert all per-case counts to a pandas DataFrame.
        """
        if not self.rows:
            return pd.DataFrame()
        df = pd.DataFrame([row.to_dict() for row in self.rows])
        return df.sort_values(["Case"])

    def a_table(self) -> pd.DataFrame:
        """
        A-sequences table: content, number of classes, number passing the PSD-test.
        """
        return pd.DataFrame(
            [
                {
                    "Case": row.case,
                    "Content": row.a_side.content,
                    f"# {self.a_mode}": row.a_side.enumerated,
                    "# passing PSD": row.a_side.psd_passed,
                }
                for row in self.rows
            ]
        )

    def b_table(self) -> pd.DataFrame:
        """
        B-sequences table: content, number of classes, number passing the PSD-test.
        """
        return pd.DataFrame(
            [
                {
                    "Case": row.case,
                    "Content": row.b_side.content,
                    f"# {self.b_mode}": row.b_side.enumerated,
                    "# passing PSD": row.b_side.psd_passed,
                }
                for row in self.rows
            ]
        )

    def pairs_table(self) -> pd.DataFrame:
        """
        Matching table for cases where both sides have candidates:
        PSD-passing -> deduplicated counts per side and number of matched pairs.
        """
        return pd.DataFrame(
            [
                {
                    "Case": row.case,
                    "A": f"{row.a_side.psd_passed} -> {row.a_side.deduped}",
                    "B": f"{row.b_side.psd_passed} -> {row.b_side.deduped}",
                    "# of pairs": row.matched_pairs,
                }
                for row in self.rows
                if row.a_side.psd_passed and row.b_side.psd_passed
            ]
        )

    def total(self, field: str) -> int:
        """
        Sum of a per-row count over all cases, e.g. total("matched_pairs").
        """
        return sum(getattr(row, field) for row in self.rows)

    def __str__(self) -> str:
        parts = [f"Search {self.params} strategy={self.strategy} beta={self.beta} alpha_d={self.alpha_d}"]
        for title, df in (
            ("A-sequences", self.a_table()),
            ("B-sequences", self.b_table()),
            ("Matching pairs", self.pairs_table()),
        ):
            parts.append(f"\n{title}")
            parts.append(df.to_string(index=False) if not df.empty else "(none)")
        for note in self.notes:
            parts.append(f"note: {note}")
        parts.append(f"total seconds: {self.total_seconds:.2f}")
        return "\n".join(parts)

    def save_json(self, filename: str) -> None:
        """
        Write the report as a JSON sidecar.
        """
        with open(filename, "w", encoding="utf-8") as f:
            f.write(self.model_dump_json(indent=2))


class ExistenceResult(pydantic.BaseModel):
    """
    Outcome of an existence decision together with verified witnesses and the search report.
    """

    status: ExistenceStatus
    witnesses: List[List[Subset]] = []
    report: Optional[SearchReport] = None
