"""Markdown summary of a census table."""

from census.table import CensusTable


class MarkdownExporter:
    """Convert a CensusTable to a Markdown document grouped by signature."""

    def export(self, table: CensusTable) -> str:
        lines = [
            f"# Sylow {table.q}-subgroup census up to x = {table.x}",
            "",
            f"**Integers counted:** {table.total}",
            f"**Distinct signatures:** {len(table.signatures())}",
            "",
            "| signature | D(H, x) | share | strata k: D_k |",
            "|---|---:|---:|---|",
        ]
        for signature in table.signatures():
            total = table.count_d(signature)
            strata = ", ".join(f"{k}: {c}" for k, c in table.strata(signature).items())
            lines.append(
                f"| {signature} | {total} | {total / table.x:.6f} | {strata} |"
            )
        lines.append("")
        return "\n".join(lines)
