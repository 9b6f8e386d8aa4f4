"""
Módulo para presentar un RunReport en consola
con un resumen breve por instancia y los agregados del lote.
"""
from typing import Any, Dict, List
import logging
from app.models.experiment import InstanceResult, RunReport
from app.utils.constants import MESSAGES, RejectReason

logger = logging.getLogger(__name__)

class RunSummaryPresenter:
    """
    Presenta los resultados de una corrida de forma legible.

    Cada algoritmo tiene su propio formato de línea; el resto de campos
    queda en el JSON del reporte.
    """

    def __init__(self):
        self.status_icons = {
            'ok': '✅',
            'error': '❌',
            'skipped': '⏭️',
        }

    def format_run(self, run: Dict[str, Any]) -> str:
        """Una repetición de un conteo o del reconocedor"""
        if 'error_type' in run:
            return f"{run['error_type']}: {run['message']}"
        if 'count' in run:
            return f"conteo {run['count']} (crudo {run['raw_value']:.4f}, margen {run['margin']:.3f})"
        if 'reason' in run:
            reason = RejectReason(run['reason'])
            return MESSAGES[reason].format(detail=run.get('detail'))
        if 'sigma_min' in run:
            return f"σ_max={run['sigma_max']:.6g}, σ_min={run['sigma_min']:.6g}"
        return str(run)

    def format_instance(self, item: InstanceResult) -> List[str]:
        """
        Líneas de una instancia

        Args:
            item: Resultado de la instancia

        Returns:
            Lista de líneas de texto
        """
        icon = self.status_icons.get(item.status, '•')
        graph = item.graph
        header = f"{icon} Instancia {item.index}"
        if 'n' in graph:
            header += f" (n={graph['n']}, m={graph['m']})"
        if item.seed is not None:
            header += f" semilla {item.seed}"
        lines = [header]

        if item.status == 'skipped':
            lines.append(f"   Omitida: {item.error_message}")
            return lines
        if item.error_type and not item.result:
            lines.append(f"   {item.error_type}: {item.error_message}")
            return lines

        runs = item.result.get('runs')
        if runs is not None:
            # Solo la primera repetición; el resto va en el agregado
            lines.append(f"   {self.format_run(runs[0])}")
            if len(runs) > 1:
                lines.append(f"   ... {len(runs)} repeticiones")
        elif 'reachable' in item.result:
            lines.append(
                f"   alcanzable={item.result['reachable']}, profundidad {item.result['depth']}, "
                f"llamadas {item.result['calls']}"
            )
        elif 'probability' in item.result:
            lines.append(
                f"   p≈{item.result['probability']:.6f} ({item.result['hits']}/{item.result['trials']}), "
                f"exacta {item.oracle.get('probability', float('nan')):.6f}"
            )
        elif 'strongly_unambiguous' in item.result:
            r = item.result
            lines.append(
                f"   st={r['unambiguous_st']}, reach={r['reach_unambiguous_s']}, "
                f"fuerte={r['strongly_unambiguous']}, max N={r['max_count']}"
            )

        if 'expected' in item.oracle:
            lines.append(f"   Oráculo: {item.oracle['expected']}")
        return lines

    def format_report(self, report: RunReport) -> str:
        """
        Genera el resumen completo de la corrida

        Args:
            report: Reporte de la corrida

        Returns:
            Texto para imprimir en consola
        """
        try:
            lines = [f"📊 {report.command}: {len(report.instances)} instancias en {report.elapsed_seconds:.2f} s"]
            for item in report.instances:
                lines.extend(self.format_instance(item))

            agg = report.aggregate
            lines.append("")
            lines.append(f"Errores: {agg.get('errors', 0)}, omitidas: {agg.get('skipped', 0)}")
            if 'runs' in agg:
                lines.append(
                    f"Acuerdo con el oráculo: {agg['agreements']}/{agg['runs']} "
                    f"(tasa de error {agg['error_rate']:.3f})"
                )
            if agg.get('bound_violations'):
                lines.append(f"⚠️ Cotas violadas: {agg['bound_violations']}")
            return "\n".join(lines)
        except Exception as e:
            logger.error(f"Error formateando el reporte: {str(e)}")
            return f"Reporte {report.command} con {len(report.instances)} instancias"

# Instancia global del presentador
run_summary_presenter = RunSummaryPresenter()
