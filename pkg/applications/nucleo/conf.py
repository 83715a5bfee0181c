# applications/nucleo/conf.py

"""
Configuración del motor geométrico.

Todos los valores llevan el prefijo GEX_ y pueden sobrescribirse desde
gexplorer/settings.py. Los módulos del proyecto los leen siempre a través de
`from applications.nucleo.conf import settings`.
"""

import os
from pathlib import Path

from appconf import AppConf
from django.conf import settings

_APPS_DIR = Path(__file__).resolve().parent.parent


class GexConf(AppConf):
    # Tolerancias relativas (escala = diámetro de la figura)
    EPS_DETECT = 1e-10
    EPS_CONFIRM = 1e-24
    # Dígitos decimales de la precisión de confirmación
    CONFIRM_DPS = 40

    # Cantidad de muestras por etapa
    DETECT_SAMPLES = 8
    CONFIRM_SAMPLES = 3
    BASELINE_SAMPLES = 3

    # Minería de relaciones
    FEATURE_CAP = 40
    MAX_COEFFICIENT = 12

    # Muestreador
    SAMPLER_MARGIN = 0.02
    SAMPLER_MIN_DISTANCE = 1e-3
    SAMPLER_MAX_STARTS = 10000

    THREADS = int(os.environ.get('GEX_THREADS', '1') or 1)

    CORPUS_DIR = _APPS_DIR / 'corpus' / 'datos'
    DEFAULT_MENU = _APPS_DIR / 'explorador' / 'menus' / 'default.json'

    class Meta:
        prefix = 'gex'
