import json
import os
import sys
from typing import List

# Add the parent directory to sys.path to allow importing sibling modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from Diff.spec_diff import DiffReport


def report_document(report: DiffReport) -> dict:
    return {
        "base_url": {
            "generated": report.generated_base,
            "existing": report.existing_base,
            "match": report.base_url_match,
        },
        "counts": {
            "matches": len(report.template_matches),
            "generated_only": len(report.generated_only),
            "existing_only": len(report.existing_only),
            "method_mismatches": len(report.method_mismatches),
            "generated_endpoints": report.generated_endpoints,
            "existing_endpoints": report.existing_endpoints,
            "matched_endpoints": report.matched_endpoints,
        },
        "metrics": {
            "template_precision": report.template_precision,
            "template_recall": report.template_recall,
            "endpoint_precision": report.endpoint_precision,
            "endpoint_recall": report.endpoint_recall,
        },
        "matches": [
            {"generated": g.render(), "existing": e.render()}
            for g, e in report.template_matches
        ],
        "generated_only": [t.render() for t in report.generated_only],
        "existing_only": [t.render() for t in report.existing_only],
        "method_mismatches": [
            {
                "generated": m.generated.render(),
                "existing": m.existing.render(),
                "generated_methods": sorted(m.generated_methods),
                "existing_methods": sorted(m.existing_methods),
            }
            for m in report.method_mismatches
        ],
    }


def render_report(report: DiffReport) -> str:
    """JSON report: counts plus sorted detail lists, byte-deterministic."""
    return json.dumps(report_document(report), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def summary_lines(report: DiffReport) -> List[str]:
    """Plain-text summary, one finding per line."""
    lines = [
        f"base URL: {'match' if report.base_url_match else 'MISMATCH'} "
        f"(generated {report.generated_base}, existing {report.existing_base})",
        f"templates matched: {len(report.template_matches)}",
        f"template precision {report.template_precision:.3f}, recall {report.template_recall:.3f}",
        f"endpoint precision {report.endpoint_precision:.3f}, recall {report.endpoint_recall:.3f}",
    ]
    lines += [f"only in generated: {t.render()}" for t in report.generated_only]
    lines += [f"only in existing: {t.render()}" for t in report.existing_only]
    lines += [
        f"methods differ on {m.generated.render()}: generated "
        f"{','.join(sorted(m.generated_methods))}, existing {','.join(sorted(m.existing_methods))}"
        for m in report.method_mismatches
    ]
    return lines
