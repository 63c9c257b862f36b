"""CSV and SVG output for run reports."""
from .charts import ChartSeries, ChartSpec, chart_from_report, write_svg_chart
from .csv_writer import report_frame, write_csv

__all__ = [
    'ChartSeries', 'ChartSpec', 'chart_from_report', 'write_svg_chart',
    'report_frame', 'write_csv',
]
