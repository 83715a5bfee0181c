# applications/corpus/informe.py

"""Salidas del informe del corpus: JSON, tabla de ancho fijo y planilla .xlsx."""

import json
import math

import openpyxl


def _decimal(valor):
    if valor is None:
        return None
    valor = float(valor)
    return repr(valor) if math.isfinite(valor) else None


def _corto(valor):
    return '-' if valor is None else f'{float(valor):.2e}'


def a_dict(informe):
    return {
        'samples': informe.muestras,
        'seed': informe.semilla,
        'summary': {
            'entries': len(informe.filas),
            'passed': len(informe.filas) - len(informe.fallidas),
            'failed': len(informe.fallidas),
            'failed_required': len(informe.fallidas_requeridas),
        },
        'entries': [
            {
                'id': f.id,
                'status': f.estado,
                'kind': f.tipo,
                'optional': f.opcional,
                'provenance': f.procedencia,
                'samples': f.muestras,
                'max_residual_fast': _decimal(f.residuo_rapido),
                'max_residual_confirm': _decimal(f.residuo_confirmacion),
                'pass': f.cumple,
                'failed_assertion': f.fallida or None,
                'error': f.error or None,
            }
            for f in informe.filas
        ],
    }


def a_json(informe):
    return json.dumps(a_dict(informe), indent=2, ensure_ascii=False) + '\n'


def tabla(informe):
    ancho = max([len(f.id) for f in informe.filas] + [len('entrada')])
    lineas = [f'{"entrada":<{ancho}}  {"estado":<11}  {"tipo":<19}  {"rápido":>8}  {"confirm.":>8}  resultado']
    for f in informe.filas:
        resultado = 'PASS' if f.cumple else ('fail (opcional)' if f.opcional else 'FAIL')
        lineas.append(
            f'{f.id:<{ancho}}  {f.estado:<11}  {f.tipo:<19}  '
            f'{_corto(f.residuo_rapido):>8}  {_corto(f.residuo_confirmacion):>8}  {resultado}'
        )
    lineas.append(
        f'{len(informe.filas)} entradas, {len(informe.fallidas)} fallidas, '
        f'{len(informe.fallidas_requeridas)} requeridas fallidas'
    )
    return '\n'.join(lineas) + '\n'


def a_xlsx(informe, destino):
    """Escribe el informe en una planilla; `destino` es una ruta o un archivo abierto."""
    workbook = openpyxl.Workbook()
    sheet = workbook.active
    sheet.title = 'Corpus'
    sheet.append([
        'Entrada', 'Estado', 'Tipo', 'Opcional', 'Procedencia', 'Muestras',
        'Residuo rápido', 'Residuo confirmación', 'Cumple', 'Error',
    ])
    for f in informe.filas:
        sheet.append([
            f.id,
            f.estado,
            f.tipo,
            'Sí' if f.opcional else 'No',
            f.procedencia,
            f.muestras,
            None if f.residuo_rapido is None else float(f.residuo_rapido),
            None if f.residuo_confirmacion is None else float(f.residuo_confirmacion),
            'Sí' if f.cumple else 'No',
            f.error or f.fallida,
        ])
    workbook.save(destino)
