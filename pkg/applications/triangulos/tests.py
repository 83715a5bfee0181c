import math

from django.test import SimpleTestCase
from hypothesis import given, settings as hsettings, strategies as st

from applications.nucleo.excepciones import DegenerateInput
from applications.nucleo.precision import CONFIRM, FAST
from applications.nucleo.primitivas import Punto, dist, line_through, signed_area
from applications.nucleo.predicados import collinear, on, tangent

from . import formulas
from .centros import (
    center, cevian, circumcircle, excenter, excircle, incircle, mixtilinear_incircle,
    ninepoint_circle, touch_point,
)
from .formulas import LadosTriangulo
from .triangulo import Triangulo


def rectangulo():
    # a=5, b=4, c=3: A=(0,0), B=(3,0), C=(0,4)
    return Triangulo.from_sides(5.0, 4.0, 3.0)


def assertPunto(caso, p, x, y, places=9):
    caso.assertAlmostEqual(float(p.x), x, places=places)
    caso.assertAlmostEqual(float(p.y), y, places=places)


lados_validos = st.tuples(
    st.floats(1.0, 3.0), st.floats(1.0, 3.0), st.floats(1.0, 3.0),
).filter(lambda t: min(t[0] + t[1] - t[2], t[1] + t[2] - t[0], t[2] + t[0] - t[1]) > 0.2)


class TrianguloTests(SimpleTestCase):

    def test_from_sides(self):
        T = rectangulo()
        assertPunto(self, T.A, 0, 0)
        assertPunto(self, T.B, 3, 0)
        assertPunto(self, T.C, 0, 4)
        self.assertAlmostEqual(T.K, 6.0)
        self.assertAlmostEqual(T.s, 6.0)
        self.assertGreater(signed_area(T.A, T.B, T.C), 0)

    def test_degenerado(self):
        with self.assertRaises(DegenerateInput):
            Triangulo.from_sides(1.0, 2.0, 3.0)
        with self.assertRaises(DegenerateInput):
            Triangulo(Punto(0.0, 0.0), Punto(1.0, 0.0), Punto(2.0, 0.0))

    def test_precision_de_confirmacion(self):
        n = CONFIRM.num
        T = Triangulo.from_sides(n(5), n(4), n(3))
        self.assertIs(T.precision, CONFIRM)
        self.assertLess(abs(T.K - 6), n('1e-35'))

    def test_rotado(self):
        T = rectangulo()
        R = T.rotado('B')
        self.assertEqual((R.A, R.B, R.C), (T.B, T.C, T.A))
        self.assertAlmostEqual(R.a, T.b)


class CentrosTests(SimpleTestCase):

    def test_centros_del_rectangulo(self):
        T = rectangulo()
        assertPunto(self, center('incenter', T), 1, 1)
        assertPunto(self, center('centroid', T), 1, 4 / 3)
        assertPunto(self, center('circumcenter', T), 1.5, 2)
        assertPunto(self, center('orthocenter', T), 0, 0)
        assertPunto(self, center('gergonne', T), 9 / 11, 8 / 11)
        assertPunto(self, center('nagel', T), 1, 2)
        assertPunto(self, center('spieker', T), 1, 1.5)

    def test_centro_de_nueve_puntos(self):
        T = rectangulo()
        # Punto medio entre circuncentro y ortocentro
        assertPunto(self, center('ninepointcenter', T), 0.75, 1)

    def test_gergonne_del_equilatero_es_el_centroide(self):
        T = Triangulo.from_sides(2.0, 2.0, 2.0)
        g, G = center('gergonne', T), center('centroid', T)
        self.assertAlmostEqual(dist(g, G), 0.0)

    def test_feuerbach(self):
        T = Triangulo.from_sides(7.0, 8.0, 9.0)
        F = center('feuerbach', T)
        self.assertTrue(on(F, incircle(T), T.tolerancia()))
        self.assertTrue(on(F, ninepoint_circle(T), T.tolerancia()))
        with self.assertRaises(DegenerateInput):
            center('feuerbach', Triangulo.from_sides(2.0, 2.0, 2.0))

    def test_excentros(self):
        T = rectangulo()
        self.assertAlmostEqual(excircle(T, 'A').radio, 6.0)
        self.assertAlmostEqual(excircle(T, 'B').radio, 3.0)
        self.assertAlmostEqual(excircle(T, 'C').radio, 2.0)
        assertPunto(self, excenter(T, 'A'), 6, 6)

    def test_touch_point_y_ceviana_de_gergonne(self):
        T = rectangulo()
        E = touch_point(T, 'BC')
        assertPunto(self, E, 1.8, 1.6)
        ceviana = cevian(T, 'A', 'gergonne')
        self.assertEqual(ceviana.vertice, T.A)
        assertPunto(self, ceviana.traza, 1.8, 1.6)
        self.assertTrue(collinear(T.A, center('gergonne', T), E, T.tolerancia()))

    def test_cevianas_concurrentes(self):
        T = Triangulo.from_sides(6.0, 7.0, 8.0)
        D = center('gergonne', T)
        for vertice in 'ABC':
            ceviana = cevian(T, vertice, 'gergonne')
            self.assertTrue(collinear(ceviana.vertice, D, ceviana.traza, T.tolerancia()))
        mediana = cevian(T, 'B', 'median')
        assertPunto(self, mediana.traza, (T.C.x + T.A.x) / 2, (T.C.y + T.A.y) / 2)

    def test_circulos(self):
        T = rectangulo()
        self.assertAlmostEqual(incircle(T).radio, 1.0)
        self.assertAlmostEqual(circumcircle(T).radio, 2.5)
        self.assertAlmostEqual(ninepoint_circle(T).radio, 1.25)
        self.assertTrue(tangent(incircle(T), line_through(T.B, T.C), T.tolerancia()))

    def test_mixtilineal_en_angulo_recto(self):
        # ρ = r / cos²(A/2) = 2 con A = 90°
        T = rectangulo()
        mixti = mixtilinear_incircle(T, 'A')
        self.assertAlmostEqual(mixti.circulo.radio, 2.0)
        assertPunto(self, mixti.circulo.centro, 2, 2)
        self.assertTrue(on(mixti.contacto_circunferencia, circumcircle(T), T.tolerancia()))

    def test_mixtilineal_en_confirmacion(self):
        n = CONFIRM.num
        T = Triangulo.from_sides(n(7), n(8), n(9))
        mixti = mixtilinear_incircle(T, 'B')
        self.assertTrue(tangent(mixti.circulo, circumcircle(T), T.tolerancia()))
        for contacto in mixti.contactos_lados:
            self.assertTrue(on(contacto, mixti.circulo, T.tolerancia()))


class FormulasTests(SimpleTestCase):

    def test_valores_del_rectangulo(self):
        t = LadosTriangulo(5.0, 4.0, 3.0)
        self.assertAlmostEqual(t.Q, -44.0)
        self.assertAlmostEqual(formulas.spoke_distance(t, 'A'), math.sqrt(145) / 11)
        self.assertAlmostEqual(formulas.gergonne_subarea(t, 'A'), 36 / 11)
        self.assertAlmostEqual(formulas.pararadius(t), 15 / 11)
        self.assertEqual(
            tuple(round(x, 12) for x in formulas.pararadius_split(t)),
            (round(20 / 11, 12), round(24 / 11, 12)),
        )
        self.assertAlmostEqual(formulas.parachord(t, 'a'), 25 / 11)
        self.assertAlmostEqual(formulas.apothem(t, 'a'), 72 / 55)

    def test_tres_pararradios(self):
        x, y, z = formulas.three_pararadii(LadosTriangulo(5.0, 4.0, 3.0))
        self.assertAlmostEqual(x, 11 / 6)
        self.assertAlmostEqual(y, 11 / 6)
        self.assertAlmostEqual(z, 11 / 6)

    def test_cuerda_de_gergonne(self):
        # Cuerda por D=(9/11, 8/11) desde (2, 0) sobre AB hasta AC
        t = LadosTriangulo(5.0, 4.0, 3.0)
        D = Punto(9 / 11, 8 / 11)
        F = Punto(2.0, 0.0)
        y = F.y + (D.y - F.y) * (0 - F.x) / (D.x - F.x)
        E = Punto(0.0, y)
        m, n = 2.0, 1.0
        p, q = y, 4.0 - y
        self.assertAlmostEqual(formulas.gergonne_chord_residual(t, m, n, p, q), 0.0)
        self.assertTrue(collinear(F, D, E))

    def test_lados_invalidos(self):
        with self.assertRaises(DegenerateInput):
            LadosTriangulo(1.0, 1.0, 3.0)

    @hsettings(max_examples=80, deadline=None)
    @given(lados_validos)
    def test_q_negativo(self, lados):
        self.assertLess(LadosTriangulo(*lados).Q, 0)

    @hsettings(max_examples=60, deadline=None)
    @given(lados_validos)
    def test_formulas_contra_la_figura(self, lados):
        t = LadosTriangulo(*lados)
        T = Triangulo.from_sides(*lados)
        D = center('gergonne', T)
        for vertice in 'ABC':
            self.assertAlmostEqual(formulas.spoke_distance(t, vertice), dist(D, T.vertice(vertice)), places=8)
        self.assertAlmostEqual(formulas.gergonne_subarea(t, 'A'), abs(signed_area(T.B, D, T.C)), places=8)
        self.assertAlmostEqual(formulas.apothem(t, 'a'), abs(line_through(T.B, T.C).evaluar(D)), places=8)
        traza = cevian(T, 'A', 'gergonne').traza
        be, ce = formulas.trace_lengths(t, 'A')
        self.assertAlmostEqual(be, dist(T.B, traza), places=8)
        self.assertAlmostEqual(ce, dist(T.C, traza), places=8)
        self.assertAlmostEqual(formulas.cevian_length(t, 'A'), dist(T.A, traza), places=8)
        self.assertAlmostEqual(
            formulas.cevian_division(t, 'A'), dist(T.A, D) / dist(D, traza), places=6,
        )

    @hsettings(max_examples=40, deadline=None)
    @given(lados_validos)
    def test_razones(self, lados):
        t = LadosTriangulo(*lados)
        T = Triangulo.from_sides(*lados)
        D = center('gergonne', T)
        self.assertAlmostEqual(
            formulas.tripolar_ratio(t, 'A', 'B'), dist(T.A, D) / dist(T.B, D), places=7,
        )
        self.assertAlmostEqual(
            formulas.barycentric_area_ratio(t),
            signed_area(T.B, D, T.C) / signed_area(T.C, D, T.A), places=7,
        )
        self.assertAlmostEqual(
            formulas.trilinear_ratio(t, 'a', 'b'),
            formulas.apothem(t, 'a') / formulas.apothem(t, 'b'), places=9,
        )

    @hsettings(max_examples=40, deadline=None)
    @given(lados_validos, st.floats(0.5, 4.0))
    def test_covarianza_de_escala(self, lados, k):
        t = LadosTriangulo(*lados)
        tk = LadosTriangulo(*(k * x for x in lados))
        self.assertAlmostEqual(formulas.spoke_distance(tk), k * formulas.spoke_distance(t), places=7)
        self.assertAlmostEqual(formulas.pararadius(tk), k * formulas.pararadius(t), places=7)
        self.assertAlmostEqual(formulas.parallel_ratio(tk), formulas.parallel_ratio(t), places=9)

    def test_formulas_en_confirmacion(self):
        n = CONFIRM.num
        t = LadosTriangulo(n(7), n(8), n(9))
        T = Triangulo.from_sides(n(7), n(8), n(9))
        D = center('gergonne', T)
        self.assertLess(abs(formulas.spoke_distance(t, 'B') - dist(T.B, D)), n('1e-30'))
        self.assertIs(t.precision, CONFIRM)
        self.assertIs(LadosTriangulo(7.0, 8.0, 9.0).precision, FAST)
