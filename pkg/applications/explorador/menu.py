# applications/explorador/menu.py

"""
Menú de construcciones: qué funciones aplica el explorador y cómo enlaza sus
argumentos. Se lee de un JSON validado contra `schema/menu.schema.json`.

Campos de cada función:
- `args`: tipos de los argumentos (P, L, C).
- `simetria`: `ninguna` (importa el orden), `total` (los argumentos del mismo
  tipo se permutan libremente) o `cola` (todos menos el primero).
- `rectas`: `todas` (lados, rectas por pares de puntos y rectas con nombre)
  o `lados` (sólo los lados del triángulo).
- `excluir_incidentes`: no enlazar un punto con una recta que lo define ni dos
  rectas que comparten un punto.
- `selectores`: una rama por selector para funciones multivaluadas.
"""

import json
from dataclasses import dataclass
from pathlib import Path

import jsonschema

from applications.lenguaje import funciones as fn
from applications.lenguaje.errores import GeoScriptError
from applications.nucleo.conf import settings

ESQUEMA = Path(__file__).resolve().parent / 'schema' / 'menu.schema.json'


@dataclass(frozen=True)
class EntradaMenu:
    funcion: str
    args: tuple
    simetria: str = 'ninguna'
    rectas: str = 'todas'
    excluir_incidentes: bool = False
    selectores: tuple = ()

    @property
    def resultado(self):
        tipo, _ = fn.tipo_de_llamada(self.funcion, list(self.args))
        if tipo == fn.MP:
            return fn.P
        if tipo == fn.MC:
            return fn.C
        return tipo

    @property
    def multivaluada(self):
        return fn.tipo_de_llamada(self.funcion, list(self.args))[0] in (fn.MP, fn.MC)


@dataclass(frozen=True)
class Menu:
    nombre: str
    entradas: tuple
    descripcion: str = ''

    @classmethod
    def desde_dict(cls, datos):
        with open(ESQUEMA, encoding='utf-8') as f:
            esquema = json.load(f)
        try:
            jsonschema.validate(instance=datos, schema=esquema)
        except jsonschema.ValidationError as e:
            raise ValueError(f'menú inválido: {e.message}') from e
        entradas = []
        for d in datos['funciones']:
            entrada = EntradaMenu(
                funcion=d['funcion'],
                args=tuple(d['args']),
                simetria=d.get('simetria', 'ninguna'),
                rectas=d.get('rectas', 'todas'),
                excluir_incidentes=d.get('excluir_incidentes', False),
                selectores=tuple(d.get('selectores', ())),
            )
            try:
                multivaluada = entrada.multivaluada
            except GeoScriptError as e:
                raise ValueError(f'menú inválido: {e}') from e
            if multivaluada and not entrada.selectores:
                raise ValueError(f'menú inválido: {entrada.funcion} es multivaluada y no tiene selectores')
            if entrada.selectores and not multivaluada:
                raise ValueError(f'menú inválido: {entrada.funcion} no admite selectores')
            entradas.append(entrada)
        return cls(datos['nombre'], tuple(entradas), datos.get('descripcion', ''))

    @classmethod
    def desde_archivo(cls, ruta):
        with open(ruta, encoding='utf-8') as f:
            return cls.desde_dict(json.load(f))

    @classmethod
    def por_defecto(cls):
        return cls.desde_archivo(settings.GEX_DEFAULT_MENU)

    def __len__(self):
        return len(self.entradas)
