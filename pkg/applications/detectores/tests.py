from django.test import SimpleTestCase

from applications.lenguaje.evaluador import evaluate
from applications.lenguaje.hechos import hechos
from applications.lenguaje.parser import parse
from applications.muestreo.muestreo import sample
from applications.nucleo.precision import CONFIRM, FAST
from applications.triangulos.triangulo import Triangulo

from .analisis import analizar, evaluar_muestras
from .hallazgos import (
    COLLINEAR, EQUALITY, LINEAR, PERPENDICULAR, QUADRATIC, RATIO, RECIPROCAL, Relacion,
)
from .incidencias import detect_incidence
from .rasgos import LONGITUD, extract, rasgos_de
from .relaciones import mine_relations
from .trivialidad import es_definicional, linea_de_base, lineas_de_base, triviality_filter

GERGONNE = """
triangle ABC;
D = gergonne(A, B, C);
"""

DEFINICION = GERGONNE + 'E = touch(BC);\n'

LLP = GERGONNE + """
w = select(apollonius(AB, AC, D), smallest);
E = center(w);
"""

CEVIANA = GERGONNE + 'E = cevian(A, B, C, gergonne);\n'

TRIPOLAR = """
triangle ABC;
constrain ratio(a, b, c) = 7:9:10;
D = gergonne(A, B, C);
"""

MEDIANA = """
triangle ABC;
constrain 2*a = b + c;
D = gergonne(A, B, C);
E = midpoint(B, C);
"""

RECTANGULO = """
triangle ABC;
constrain angle(A) = deg(90);
D = gergonne(A, B, C);
E = foot(D, AC);
F = foot(D, AB);
G = foot(D, BC);
"""


def muestras_de(script, seed=0, n=8, m=3):
    muestras = sample(script, n + m, seed=seed)
    return muestras[:n], muestras[n:]


def figuras(fuente, seed=0):
    script = parse(fuente)
    rapidas, confirmacion = muestras_de(script, seed)
    return (
        script,
        evaluar_muestras(script, rapidas, FAST),
        evaluar_muestras(script, confirmacion, CONFIRM),
    )


def buscar(hallazgos, tipo, operandos, coeficientes=None):
    for h in hallazgos:
        r = h.relacion
        if r.tipo == tipo and set(r.operandos) == set(operandos) \
                and (coeficientes is None or r.coeficientes == coeficientes):
            return h
    return None


class RasgosTests(SimpleTestCase):

    def test_cuatro_puntos_seis_distancias(self):
        env = evaluate(parse(GERGONNE), Triangulo.from_sides(5.0, 6.0, 7.0))
        rasgos = extract(env)
        distancias = [n for n in rasgos.escalares if n.startswith('dist(')]
        self.assertEqual(len(distancias), 6)
        self.assertEqual(rasgos.dimensiones['K'], 'area')
        self.assertIn('s', rasgos.de_dimension(LONGITUD))

    def test_rayos_iguales_en_el_equilatero(self):
        env = evaluate(parse(GERGONNE), Triangulo.from_sides(1.0, 1.0, 1.0))
        rasgos = extract(env)
        ad = rasgos.escalares['dist(A, D)']
        self.assertAlmostEqual(ad, rasgos.escalares['dist(B, D)'], places=12)
        self.assertAlmostEqual(ad, rasgos.escalares['dist(C, D)'], places=12)

    def test_invariancia_por_rotacion(self):
        T = Triangulo.from_sides(5.0, 6.0, 7.0)
        script = parse(LLP)
        original = extract(evaluate(script, T))
        rotado = extract(evaluate(script, T.transformado(1.1, 1.0, 0.3, -2.0)), referencia=original)
        self.assertEqual(list(original.escalares), list(rotado.escalares))
        for nombre, valor in original.escalares.items():
            self.assertAlmostEqual(valor, rotado.escalares[nombre], places=9, msg=nombre)

    def test_tope_por_dimension(self):
        env = evaluate(parse(RECTANGULO), Triangulo.from_sides(5.0, 4.0, 3.0))
        rasgos = extract(env, tope=5)
        self.assertEqual(len(rasgos.de_dimension(LONGITUD)), 5)
        # primero los del triángulo de partida
        self.assertIn('dist(A, B)', rasgos.escalares)

    def test_centro_de_circulo_repetido_no_se_agrega(self):
        env = evaluate(parse(LLP), Triangulo.from_sides(5.0, 6.0, 7.0))
        self.assertNotIn('center(w)', extract(env).puntos)


class IncidenciasTests(SimpleTestCase):

    def test_colinealidad_definitoria(self):
        _, rapidas, confirmacion = figuras(DEFINICION)
        hallazgos = detect_incidence(rapidas, confirmacion)
        self.assertIsNotNone(buscar(hallazgos, COLLINEAR, ('A', 'D', 'E')))
        self.assertIsNotNone(buscar(hallazgos, COLLINEAR, ('B', 'C', 'E')))
        for h in hallazgos:
            self.assertLessEqual(h.evidencia.residuo_confirmacion, 1e-24)

    def test_perpendicular_llp(self):
        _, rapidas, confirmacion = figuras(LLP)
        hallazgos = detect_incidence(rapidas, confirmacion)
        self.assertIsNotNone(buscar(hallazgos, PERPENDICULAR, ('line(D, E)', 'line(B, C)')))

    def test_punto_generico_sin_incidencias(self):
        _, rapidas, confirmacion = figuras('triangle ABC; D = interior(A, B, C);')
        self.assertEqual(detect_incidence(rapidas, confirmacion), [])

    def test_sin_figuras(self):
        with self.assertRaises(ValueError):
            detect_incidence([])
        with self.assertRaises(ValueError):
            mine_relations([])
        with self.assertRaises(ValueError):
            analizar(parse(GERGONNE), [], [])

    def test_relacion_como_afirmacion(self):
        relacion = Relacion(COLLINEAR, ('A', 'D', 'E'))
        script = parse(DEFINICION + f'assert {relacion.afirmacion()};')
        env = evaluate(script, Triangulo.from_sides(5.0, 6.0, 7.0))
        self.assertTrue(env.todas_cumplen)


class RelacionesTests(SimpleTestCase):

    def test_razon_7_9_10(self):
        _, rapidas, confirmacion = figuras(TRIPOLAR)
        hallazgos = mine_relations(rapidas, confirmacion)
        h = buscar(hallazgos, RATIO, ('dist(A, D)', 'dist(C, D)'), (2, 1))
        self.assertIsNotNone(h)
        self.assertEqual(h.relacion.afirmacion(), 'dist(A, D) = 2 * dist(C, D)')
        self.assertEqual(h.evidencia.muestras, 11)

    def test_afirmacion_de_la_razon_se_cumple(self):
        relacion = Relacion(RATIO, ('dist(A, D)', 'dist(C, D)'), (2, 1))
        script = parse(TRIPOLAR + f'assert {relacion.afirmacion()};')
        env = evaluate(script, Triangulo.from_sides(7.0, 9.0, 10.0))
        self.assertTrue(env.todas_cumplen)

    def test_perimetro_dividido(self):
        _, rapidas, confirmacion = figuras(CEVIANA)
        hallazgos = mine_relations(rapidas, confirmacion)
        operandos = ('dist(A, B)', 'dist(C, E)', 'dist(A, C)', 'dist(B, E)')
        self.assertIsNotNone(buscar(hallazgos, LINEAR, operandos, (1, 1, -1, -1)))
        # AB + CE = s
        self.assertIsNotNone(buscar(hallazgos, LINEAR, ('s', 'dist(A, B)', 'dist(C, E)')))

    def test_cuadratica_de_la_mediana(self):
        _, rapidas, confirmacion = figuras(MEDIANA, seed=4)
        hallazgos = mine_relations(rapidas, confirmacion)
        operandos = ('dist(A, D)', 'dist(A, E)', 'dist(B, C)', 'dist(D, E)')
        self.assertIsNotNone(buscar(hallazgos, QUADRATIC, operandos, (1, 1, -1, -1)))

    def test_reciproca_del_triangulo_rectangulo(self):
        _, rapidas, confirmacion = figuras(RECTANGULO, seed=2)
        hallazgos = mine_relations(rapidas, confirmacion)
        self.assertIsNotNone(buscar(hallazgos, RECIPROCAL, ('dist(B, F)', 'dist(C, E)', 'dist(D, G)')))

    def test_coeficientes_en_minimos_terminos(self):
        _, rapidas, confirmacion = figuras(CEVIANA)
        vistas = set()
        for h in mine_relations(rapidas, confirmacion):
            r = h.relacion
            self.assertNotIn(r.firma(), vistas)
            vistas.add(r.firma())
            if r.tipo == RATIO:
                p, q = r.coeficientes
                self.assertLessEqual(max(p, q), 12)
                self.assertNotEqual(p, q)

    def test_punto_generico_sin_relaciones(self):
        _, rapidas, confirmacion = figuras('triangle ABC; D = interior(A, B, C);', seed=7)
        self.assertEqual(mine_relations(rapidas, confirmacion), [])

    def test_igualdad_en_el_equilatero(self):
        rasgos = rasgos_de([evaluate(parse(GERGONNE), Triangulo.from_sides(1.0, 1.0, 1.0))])
        hallazgos = mine_relations(rasgos)
        self.assertIsNotNone(buscar(hallazgos, EQUALITY, ('dist(A, D)', 'dist(B, D)')))


GENERICAS = (
    'triangle ABC; D = interior(A, B, C);',
    'triangle ABC; D = interior(A, B, C); E = interior(A, B, C);',
)


class FalsosPositivosTests(SimpleTestCase):

    def test_figuras_genericas_sin_hallazgos(self):
        # sin coincidencias construidas no se confirma nada, semilla por semilla
        scripts = [parse(f) for f in GENERICAS]
        emitidos = []
        for semilla in range(1000):
            script = scripts[semilla % len(scripts)]
            rapidas, confirmacion = muestras_de(script, seed=semilla)
            rapidos = evaluar_muestras(script, rapidas, FAST)
            confirmados = evaluar_muestras(script, confirmacion, CONFIRM)
            hallazgos = detect_incidence(rapidos, confirmados) + mine_relations(rapidos, confirmados)
            emitidos.extend((semilla, h.relacion.afirmacion()) for h in hallazgos)
        self.assertEqual(emitidos, [])


class TrivialidadTests(SimpleTestCase):

    def test_linea_de_base(self):
        base = linea_de_base(parse(CEVIANA + 'F = touch(AB);'))
        expr = {s.nombre: s.expr for s in base.asignaciones}
        self.assertEqual(expr['D'].funcion, 'interior')
        # la ceviana sigue pasando por el punto generalizado
        self.assertEqual(expr['E'].funcion, 'intersect')
        self.assertEqual(expr['E'].args[0].funcion, 'line')
        self.assertEqual(expr['F'].funcion, 'touch')
        self.assertEqual(base.tipos['E'], 'P')
        self.assertIsNone(linea_de_base(parse('triangle ABC; D = centroid(A, B, C);')))

    def test_linea_de_base_sin_punto_de_gergonne(self):
        base = linea_de_base(parse('triangle ABC; E = cevian(A, B, C, gergonne); F = touch(AB);'))
        expr = {s.nombre: s.expr for s in base.asignaciones}
        self.assertEqual(expr['E'].funcion, 'between')
        self.assertEqual(expr['F'].funcion, 'between')

    def test_hechos_de_cualquier_punto_de_la_ceviana_son_triviales(self):
        script = parse(CEVIANA + 'F = centroid(A, C, D);')
        rapidas, _ = muestras_de(script, seed=5)
        rasgos = rasgos_de(evaluar_muestras(script, rapidas, FAST))
        areas = Relacion(RATIO, ('area(A, C, E)', 'area(A, E, F)'), (3, 1))
        self.assertTrue(all(areas.cumple(r) for r in rasgos))
        generalizada, _ = lineas_de_base(script, rapidas, rasgos[0])
        self.assertTrue(generalizada)
        self.assertTrue(all(areas.cumple(r) for r in generalizada))
        self.assertTrue(triviality_filter(areas, script, generalizada))
        colineal = Relacion(COLLINEAR, ('A', 'D', 'E'))
        self.assertTrue(triviality_filter(colineal, script, generalizada))

    def test_contacto_sobre_bc_es_trivial(self):
        script = parse(DEFINICION)
        rapidas, confirmacion = muestras_de(script)
        analisis = analizar(script, rapidas, confirmacion)
        self.assertTrue(buscar(analisis.hallazgos, COLLINEAR, ('B', 'C', 'E')).trivial)
        definitoria = buscar(analisis.hallazgos, COLLINEAR, ('A', 'D', 'E'))
        self.assertFalse(definitoria.trivial)
        self.assertGreater(definitoria.evidencia.residuo_control, 1e-6)

    def test_perimetro_dividido_no_es_trivial(self):
        script = parse(CEVIANA)
        rapidas, confirmacion = muestras_de(script, seed=1)
        analisis = analizar(script, rapidas, confirmacion)
        operandos = ('dist(A, B)', 'dist(C, E)', 'dist(A, C)', 'dist(B, E)')
        h = buscar(analisis.hallazgos, LINEAR, operandos, (1, 1, -1, -1))
        self.assertFalse(h.trivial)
        self.assertIn(h, analisis.no_triviales)

    def test_perpendicular_por_construccion_es_trivial(self):
        script = parse(GERGONNE + 'm = perpendicular(D, BC);')
        rapidas, confirmacion = muestras_de(script, seed=3)
        analisis = analizar(script, rapidas, confirmacion)
        h = buscar(analisis.hallazgos, PERPENDICULAR, ('m', 'line(B, C)'))
        self.assertTrue(h.trivial)
        self.assertTrue(es_definicional(h.relacion, hechos(script), {'m': {'m'}, 'line(B, C)': {frozenset('BC')}}))

    def test_relaciones_del_triangulo_de_partida_son_triviales(self):
        script = parse(TRIPOLAR)
        rapidas, confirmacion = muestras_de(script)
        analisis = analizar(script, rapidas, confirmacion)
        lados = buscar(analisis.hallazgos, RATIO, ('dist(A, B)', 'dist(A, C)'))
        self.assertTrue(lados.trivial)
        self.assertFalse(buscar(analisis.hallazgos, RATIO, ('dist(A, D)', 'dist(C, D)')).trivial)

    def test_sin_lineas_de_base_decide_lo_definicional(self):
        script = parse(DEFINICION)
        relacion = Relacion(COLLINEAR, ('A', 'D', 'E'))
        self.assertFalse(triviality_filter(relacion, script, []))
        self.assertTrue(triviality_filter(Relacion(COLLINEAR, ('B', 'C', 'E')), script, []))
