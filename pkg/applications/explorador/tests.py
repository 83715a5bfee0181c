import json
import os
import tempfile
from io import StringIO
from itertools import combinations, product
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase
from django.urls import reverse

from applications.detectores.hallazgos import COLLINEAR, LINEAR, PERPENDICULAR
from applications.lenguaje.parser import parse
from applications.muestreo.muestreo import sample

from .catalogo import validar_json
from .configuraciones import CONFIGURACIONES, configuracion
from .enumeracion import Paso, clave, enumerate as enumerar, fuente_de
from .menu import Menu
from .models import Exploracion
from .motor import Corrida, run
from .render import render

REDUCIDO = Menu.desde_dict({
    'nombre': 'reducido',
    'funciones': [
        {'funcion': 'midpoint', 'args': ['P', 'P'], 'simetria': 'total'},
        {'funcion': 'foot', 'args': ['P', 'L'], 'excluir_incidentes': True},
        {'funcion': 'parallel', 'args': ['P', 'L'], 'excluir_incidentes': True},
        {'funcion': 'perpendicular', 'args': ['P', 'L']},
        {'funcion': 'centroid', 'args': ['P', 'P', 'P'], 'simetria': 'total'},
    ],
})

CONTACTO_Y_APOLONIO = Menu.desde_dict({
    'nombre': 'contacto-apolonio',
    'funciones': [
        {'funcion': 'touch', 'args': ['L'], 'rectas': 'lados'},
        {'funcion': 'apollonius', 'args': ['L', 'L', 'P'], 'simetria': 'total', 'rectas': 'lados',
         'selectores': ['smallest']},
    ],
})

SOLO_CONTACTO = Menu.desde_dict({
    'nombre': 'contacto',
    'funciones': [{'funcion': 'touch', 'args': ['L'], 'rectas': 'lados'}],
})

FIGURA_DEFINICION = """
triangle ABC;
D = gergonne(A, B, C);
w = incircle(A, B, C);
E = touch(BC);
F = touch(CA);
G = touch(AB);
m1 = line(A, E);
m2 = line(B, F);
m3 = line(C, G);
assert colline(A, D, E);
"""


def fuerza_bruta(puntos, menu):
    """Cantidad de pasos de un menú de funciones sobre puntos y rectas por pares, a mano."""
    rectas = [frozenset(par) for par in combinations(puntos, 2)]
    total = 0
    for entrada in menu.entradas:
        clases = set()
        listas = [puntos if t == 'P' else rectas for t in entrada.args]
        for eleccion in product(*listas):
            if len(set(eleccion)) != len(eleccion):
                continue
            p, r = eleccion[0], eleccion[-1]
            if entrada.excluir_incidentes and isinstance(r, frozenset) and p in r:
                continue
            clases.add(frozenset(eleccion) if entrada.simetria == 'total' else eleccion)
        total += len(clases)
    return total


class ConfiguracionesTests(SimpleTestCase):

    def test_todas_las_configuraciones_parsean(self):
        for id in CONFIGURACIONES:
            script = configuracion(id).script()
            self.assertEqual(script.vertices, 'ABC')
            self.assertTrue(any('gergonne' in s for s in configuracion(id).sentencias), id)

    def test_restricciones_en_el_encabezado(self):
        script = configuracion('gergonne-point', 'ratio(a, b, c) = 7:9:10').script()
        self.assertEqual(len(script.ecuaciones()), 2)

    def test_errores(self):
        with self.assertRaises(ValueError):
            configuracion('nada')
        with self.assertRaises(ValueError):
            configuracion('two-cevians', tipos=('nagel', 'centroid'))
        with self.assertRaises(ValueError):
            configuracion('cevian-center', tipos=('gergonne', 'median'))
        self.assertIn('D = cevian(A, B, C, nagel);',
                      configuracion('two-cevians', tipos=('nagel', 'gergonne')).sentencias)


class MenuTests(SimpleTestCase):

    def test_menu_por_defecto(self):
        menu = Menu.por_defecto()
        self.assertGreater(len(menu), 10)
        apolonio = next(e for e in menu.entradas if e.funcion == 'apollonius')
        self.assertTrue(apolonio.multivaluada)
        self.assertEqual(apolonio.resultado, 'C')

    def test_menu_invalido(self):
        with self.assertRaises(ValueError):
            Menu.desde_dict({'nombre': 'x', 'funciones': [{'funcion': 'midpoint', 'args': ['Q']}]})
        with self.assertRaises(ValueError):
            Menu.desde_dict({'nombre': 'x', 'funciones': [{'funcion': 'apollonius', 'args': ['L', 'L', 'P']}]})
        with self.assertRaises(ValueError):
            Menu.desde_dict({'nombre': 'x', 'funciones': [
                {'funcion': 'midpoint', 'args': ['P', 'P'], 'selectores': ['smallest']}]})
        with self.assertRaises(ValueError):
            Menu.desde_dict({'nombre': 'x', 'funciones': [{'funcion': 'midpoint', 'args': ['P']}]})


class EnumeracionTests(SimpleTestCase):

    def test_profundidad_cero(self):
        self.assertEqual(list(enumerar(configuracion('gergonne-point'), 0, REDUCIDO)), [()])

    def test_forma_cerrada_del_menu_reducido(self):
        secuencias = list(enumerar(configuracion('gergonne-point'), 1, REDUCIDO))
        # midpoint 6 + foot 12 + parallel 12 + perpendicular 24 + centroid 4
        self.assertEqual(len([s for s in secuencias if len(s) == 1]), 58)
        self.assertEqual(len(secuencias), 59)
        self.assertEqual(fuerza_bruta(list('ABCD'), REDUCIDO), 58)

    def test_sin_pasos_repetidos(self):
        for secuencia in enumerar(configuracion('gergonne-point'), 2, REDUCIDO):
            claves = [p.expresion() for p in secuencia]
            self.assertEqual(len(claves), len(set(claves)))
            medios = [frozenset(p.args) for p in secuencia if p.funcion == 'midpoint']
            self.assertEqual(len(medios), len(set(medios)))

    def test_simetria_total(self):
        pasos = [s[0] for s in enumerar(configuracion('gergonne-point'), 1, REDUCIDO) if s]
        medios = [p.args for p in pasos if p.funcion == 'midpoint']
        self.assertEqual(sorted(medios), [tuple(par) for par in combinations('ABCD', 2)])

    def test_nombres_nuevos(self):
        pasos = [s[0] for s in enumerar(configuracion('gergonne-point'), 1, CONTACTO_Y_APOLONIO) if s]
        self.assertEqual(pasos[0].texto(), 'E = touch(AB);')
        apolonio = [p for p in pasos if p.funcion == 'apollonius']
        self.assertEqual(apolonio[0].nombre, 'w1')
        self.assertIn('w1 = select(apollonius(AB, AC, D), smallest);', [p.texto() for p in apolonio])
        # tres pares de lados por cuatro puntos
        self.assertEqual(len(apolonio), 12)

    def test_nombre_saltea_k(self):
        inicio = parse('triangle ABC; D = gergonne(A, B, C); E = nagel(A, B, C); F = centroid(A, B, C); '
                       'G = incenter(A, B, C); H = symmedian(A, B, C); I = spieker(A, B, C); '
                       'J = mittenpunkt(A, B, C);')
        self.assertEqual(list(enumerar(inicio, 1, SOLO_CONTACTO))[1][0].nombre, 'L')

    def test_expresiones_existentes_no_se_repiten(self):
        inicio = configuracion('perpendicular-feet')
        pasos = [s[0] for s in enumerar(inicio, 1, Menu.desde_dict({
            'nombre': 'pies', 'funciones': [{'funcion': 'foot', 'args': ['P', 'L'], 'excluir_incidentes': True}],
        })) if s]
        textos = [p.expresion() for p in pasos]
        # E, F y G ya son los pies desde D; F está escrito sobre CA
        for existente in ('foot(D, BC)', 'foot(D, AC)', 'foot(D, AB)'):
            self.assertNotIn(existente, textos)
        self.assertIn('foot(E, AB)', textos)
        self.assertEqual(clave('foot(D, CA)'), clave('foot(D, AC)'))

    def test_excluir_incidentes(self):
        pasos = [s[0] for s in enumerar(configuracion('pararadius'), 1, Menu.desde_dict({
            'nombre': 'pies', 'funciones': [{'funcion': 'foot', 'args': ['P', 'L'], 'excluir_incidentes': True}],
        })) if s]
        textos = [p.expresion() for p in pasos]
        # m1 pasa por D por definición
        self.assertNotIn('foot(D, m1)', textos)
        self.assertNotIn('foot(A, AB)', textos)
        self.assertIn('foot(A, m1)', textos)

    def test_toda_secuencia_del_menu_por_defecto_parsea(self):
        inicio = configuracion('gergonne-point')
        for secuencia in enumerar(inicio, 1):
            parse(fuente_de(inicio.fuente(), secuencia))


class MotorTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.catalogo = run('gergonne-point', 1, menu=CONTACTO_Y_APOLONIO, semilla=0, muestras=6, confirmacion=2)

    def test_colinealidad_definitoria(self):
        registros = [r for r in self.catalogo.buscar(COLLINEAR, ('A', 'D', 'E'))
                     if r.pasos == ('E = touch(BC);',)]
        self.assertEqual(len(registros), 1)
        self.assertFalse(registros[0].trivial)

    def test_perpendicularidad_llp(self):
        registros = [r for r in self.catalogo.buscar(PERPENDICULAR, ('line(D, center(w1))', 'line(B, C)'))
                     if r.pasos == ('w1 = select(apollonius(AB, AC, D), smallest);',)]
        self.assertEqual(len(registros), 1)
        self.assertFalse(registros[0].trivial)
        self.assertLessEqual(float(registros[0].evidencia.residuo_confirmacion), 1e-24)

    def test_sin_firmas_repetidas(self):
        firmas = [r.firma() for r in self.catalogo.registros]
        self.assertEqual(len(firmas), len(set(firmas)))

    def test_esquema(self):
        self.catalogo.validar()
        datos = json.loads(self.catalogo.a_json())
        self.assertEqual(datos['summary']['sequences'], self.catalogo.secuencias)
        datos['entries'].append({'config': 'x'})
        with self.assertRaises(ValueError):
            validar_json(datos)

    def test_determinismo(self):
        otro = run('gergonne-point', 1, menu=CONTACTO_Y_APOLONIO, semilla=0, muestras=6, confirmacion=2, hilos=3)
        self.assertEqual(self.catalogo.a_json(), otro.a_json())

    def test_monotonia_en_la_profundidad(self):
        intrinseco = run('gergonne-point', 0, menu=CONTACTO_Y_APOLONIO, semilla=0, muestras=6, confirmacion=2)
        self.assertEqual(intrinseco.secuencias, 1)
        self.assertLessEqual(intrinseco.relaciones(True), self.catalogo.relaciones(True))

    def test_secuencia_degenerada_queda_omitida(self):
        inicio = configuracion('gergonne-point')
        muestras = sample(inicio.script(), 3, seed=0)
        corrida = Corrida(inicio.fuente(), muestras[:2], muestras[2:], 0, None)
        resultado = corrida.analizar((Paso('E', 'intersect', ('AB', 'AB')),))
        self.assertIsNotNone(resultado.omision)
        self.assertEqual(resultado.hallazgos, ())

    def test_error_inesperado_queda_omitido(self):
        inicio = configuracion('gergonne-point')
        muestras = sample(inicio.script(), 3, seed=0)
        corrida = Corrida(inicio.fuente(), muestras[:2], muestras[2:], 0, None)
        paso = (Paso('E', 'midpoint', ('A', 'D')),)
        with mock.patch('applications.explorador.motor.analizar', side_effect=ZeroDivisionError('division by zero')):
            with self.assertLogs('applications.explorador.motor', level='WARNING'):
                resultado = corrida.analizar(paso)
        self.assertEqual(resultado.omision.motivo, 'ZeroDivisionError: division by zero')
        self.assertEqual(resultado.hallazgos, ())

    def test_run_sin_muestras(self):
        with self.assertRaises(ValueError):
            run('gergonne-point', 0, menu=SOLO_CONTACTO, muestras=0, confirmacion=2)

    def test_perimetro_dividido_intrinseco(self):
        catalogo = run('gergonne-cevian', 0, menu=SOLO_CONTACTO, semilla=1, muestras=6, confirmacion=2)
        operandos = ('s', 'dist(A, B)', 'dist(C, E)')
        self.assertTrue(any(not r.trivial for r in catalogo.buscar(LINEAR, operandos)))


class RenderTests(SimpleTestCase):

    def test_elementos_de_la_figura(self):
        svg = render(parse(FIGURA_DEFINICION), (3, 4, 5))
        self.assertEqual(svg.count('<polygon'), 1)
        self.assertEqual(svg.count('class="circulo"'), 1)
        self.assertEqual(svg.count('class="segmento"'), 3)
        self.assertEqual(svg.count('class="punto gergonne"'), 1)
        self.assertEqual(svg.count('class="etiqueta"'), 7)

    def test_determinismo(self):
        script = parse(FIGURA_DEFINICION)
        self.assertEqual(render(script, (5, 6, 7)), render(script, (5, 6, 7)))

    def test_recta_sin_par_definitorio_se_recorta(self):
        svg = render(parse('triangle ABC; D = gergonne(A, B, C); m = parallel(D, BC);'), (5, 6, 7))
        self.assertEqual(svg.count('class="recta"'), 1)


class ComandosTests(SimpleTestCase):

    def setUp(self):
        self.dir = tempfile.TemporaryDirectory()
        self.addCleanup(self.dir.cleanup)

    def escribir(self, nombre, texto):
        ruta = os.path.join(self.dir.name, nombre)
        with open(ruta, 'w', encoding='utf-8') as f:
            f.write(texto)
        return ruta

    def test_eval_afirmacion_cumplida(self):
        ruta = self.escribir('def.geo', FIGURA_DEFINICION)
        call_command('geo_eval', ruta, '--triangle', '3,4,5', stdout=StringIO())

    def test_eval_afirmacion_corrupta(self):
        ruta = self.escribir('mal.geo', FIGURA_DEFINICION.replace('colline(A, D, E)', 'colline(A, D, F)'))
        with self.assertRaises(CommandError) as ctx:
            call_command('geo_eval', ruta, '--triangle', '3,4,5', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)

    def test_eval_archivo_malformado(self):
        ruta = self.escribir('roto.geo', 'triangle ABC;\nD = gergonne(A, B;\n')
        with self.assertRaises(CommandError) as ctx:
            call_command('geo_eval', ruta, '--triangle', '3,4,5', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('2:', str(ctx.exception))

    def test_eval_imprime_15_cifras(self):
        ruta = self.escribir('def.geo', FIGURA_DEFINICION)
        salida = StringIO()
        call_command('geo_eval', ruta, '--triangle', '3,4,5', stdout=salida)
        self.assertIn('PASS colline(A, D, E)', salida.getvalue())

    def test_render_triangulo_invalido(self):
        ruta = self.escribir('def.geo', FIGURA_DEFINICION)
        with self.assertRaises(CommandError) as ctx:
            call_command('geo_render', ruta, '--triangle', '1,1,5', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_render_a_archivo(self):
        ruta = self.escribir('def.geo', FIGURA_DEFINICION)
        salida = os.path.join(self.dir.name, 'fig.svg')
        call_command('geo_render', ruta, '--triangle', '3,4,5', '-o', salida, stdout=StringIO())
        with open(salida, encoding='utf-8') as f:
            self.assertIn('<svg', f.read())

    def test_explorar_profundidad_3_rechazada(self):
        with self.assertRaises(CommandError):
            call_command('geo_explorar', '--start', 'gergonne-point', '--depth', '3', stdout=StringIO())

    def test_explorar_sin_muestras(self):
        for opcion, valor in (('--samples', '0'), ('--samples', '-3'), ('--confirm', '0')):
            with self.subTest(opcion=opcion, valor=valor):
                with self.assertRaises(CommandError) as ctx:
                    call_command('geo_explorar', '--start', 'gergonne-point', '--depth', '0',
                                 opcion, valor, stdout=StringIO())
                self.assertEqual(ctx.exception.returncode, 2)

    def test_explorar_razon_7_9_10(self):
        salida = os.path.join(self.dir.name, 'catalogo.json')
        texto = StringIO()
        call_command(
            'geo_explorar', '--start', 'gergonne-point', '--depth', '0',
            '--constraints', 'ratio(a, b, c) = 7:9:10', '--out', salida, '--samples', '6', '--confirm', '2',
            stdout=texto,
        )
        with open(salida, encoding='utf-8') as f:
            datos = json.load(f)
        validar_json(datos)
        afirmaciones = {e['relation']['assertion'] for e in datos['entries'] if not e['trivial']}
        self.assertIn('dist(A, D) = 2 * dist(C, D)', afirmaciones)
        self.assertIn('secuencias analizadas', texto.getvalue())


class PersistenciaTests(TestCase):

    @classmethod
    def setUpTestData(cls):
        catalogo = run('gergonne-point', 1, menu=SOLO_CONTACTO, semilla=0, muestras=6, confirmacion=2)
        cls.catalogo = catalogo
        cls.exploracion = catalogo.guardar(nombre='contactos')

    def test_guardar_y_releer(self):
        self.assertEqual(self.exploracion.entradas.count(), len(self.catalogo.registros))
        datos = Exploracion.objects.get(pk=self.exploracion.pk).a_dict()
        validar_json(datos)
        self.assertEqual(datos['entries'], self.catalogo.a_dict()['entries'])

    def test_vistas(self):
        respuesta = self.client.get(reverse('explorador_app:exploracion_list'))
        self.assertEqual(respuesta.status_code, 200)
        respuesta = self.client.get(reverse('explorador_app:entrada_list'), {'tipo': COLLINEAR})
        self.assertEqual(respuesta.status_code, 200)
        self.assertTrue(all(e.tipo == COLLINEAR for e in respuesta.context['entradas']))

    def test_json_y_excel(self):
        respuesta = self.client.get(reverse('explorador_app:catalogo_json', args=[self.exploracion.pk]))
        self.assertEqual(respuesta.json()['config'], 'gergonne-point')
        respuesta = self.client.get(reverse('explorador_app:exportar_catalogo_excel', args=[self.exploracion.pk]))
        self.assertIn('attachment', respuesta['Content-Disposition'])

    def test_figura_de_una_entrada(self):
        entrada = self.exploracion.entradas.filter(trivial=False).first()
        respuesta = self.client.get(reverse('explorador_app:figura_entrada', args=[entrada.pk]))
        self.assertEqual(respuesta.status_code, 200)
        self.assertEqual(respuesta['Content-Type'], 'image/svg+xml')
        respuesta = self.client.get(
            reverse('explorador_app:figura_entrada', args=[entrada.pk]), {'lados': '1,1,5'},
        )
        self.assertEqual(respuesta.status_code, 400)
