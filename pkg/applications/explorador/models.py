# applications/explorador/models.py

"""
Persistencia de las exploraciones.

Una Exploracion guarda los parámetros de una corrida del explorador (con qué
configuración, restricciones, menú, profundidad y semilla se hizo) y sus
EntradaCatalogo, una por relación confirmada. Los catálogos se generan con
`geo_explorar --guardar` o con `Catalogo.guardar()`.
"""

from django.db import models, transaction

from applications.detectores.hallazgos import TIPOS_RELACION


class Exploracion(models.Model):
    """Una corrida del explorador."""
    nombre = models.CharField('Nombre', max_length=200, blank=True)
    configuracion = models.CharField('Configuración inicial', max_length=50)
    restricciones = models.CharField('Restricciones', max_length=500, blank=True)
    profundidad = models.PositiveSmallIntegerField('Profundidad')
    semilla = models.BigIntegerField('Semilla', default=0)
    menu = models.CharField('Menú', max_length=100, blank=True)
    muestras = models.PositiveIntegerField('Muestras de detección')
    muestras_confirmacion = models.PositiveIntegerField('Muestras de confirmación')
    secuencias = models.PositiveIntegerField('Secuencias analizadas', default=0)
    fuente = models.TextField('Script inicial', blank=True)
    # [{'steps': [...], 'reason': '...'}]
    omisiones = models.JSONField('Secuencias omitidas', default=list, blank=True)
    fecha = models.DateTimeField('Fecha', auto_now_add=True)

    class Meta:
        verbose_name = 'Exploración'
        verbose_name_plural = 'Exploraciones'
        ordering = ['-fecha', '-id']

    def __str__(self):
        base = self.nombre or self.configuracion
        return f'{base} (profundidad {self.profundidad}, semilla {self.semilla})'

    @classmethod
    @transaction.atomic
    def desde_catalogo(cls, catalogo, nombre=''):
        exploracion = cls.objects.create(
            nombre=nombre,
            configuracion=catalogo.configuracion,
            restricciones=catalogo.restricciones,
            profundidad=catalogo.profundidad,
            semilla=catalogo.semilla,
            menu=catalogo.menu,
            muestras=catalogo.muestras,
            muestras_confirmacion=catalogo.muestras_confirmacion,
            secuencias=catalogo.secuencias,
            fuente=catalogo.fuente,
            omisiones=[{'steps': list(o.pasos), 'reason': o.motivo} for o in catalogo.omisiones],
        )
        EntradaCatalogo.objects.bulk_create([
            EntradaCatalogo.desde_registro(exploracion, orden, registro)
            for orden, registro in enumerate(catalogo.registros)
        ])
        return exploracion

    def get_no_triviales(self):
        return self.entradas.filter(trivial=False).count()

    def a_dict(self):
        """El catálogo guardado en el mismo formato que `Catalogo.a_dict`."""
        entradas = list(self.entradas.all())
        triviales = sum(1 for e in entradas if e.trivial)
        return {
            'config': self.configuracion,
            'constraints': self.restricciones,
            'depth': self.profundidad,
            'seed': self.semilla,
            'menu': self.menu,
            'samples': {'detect': self.muestras, 'confirm': self.muestras_confirmacion},
            'summary': {
                'sequences': self.secuencias,
                'skipped': len(self.omisiones),
                'relations': len(entradas) - triviales,
                'trivial': triviales,
            },
            'entries': [e.a_dict() for e in entradas],
            'skips': self.omisiones,
        }


def _decimal(valor):
    return None if valor is None else repr(float(valor))


class EntradaCatalogo(models.Model):
    """Una relación confirmada tras una secuencia de construcción."""
    TIPOS = [(t, t) for t in TIPOS_RELACION]

    exploracion = models.ForeignKey(
        Exploracion,
        on_delete=models.CASCADE,
        related_name='entradas',
        verbose_name='Exploración',
    )
    orden = models.PositiveIntegerField('Orden')
    pasos = models.JSONField('Pasos', default=list, blank=True)
    tipo = models.CharField('Tipo de relación', max_length=30, choices=TIPOS)
    operandos = models.JSONField('Operandos', default=list)
    coeficientes = models.JSONField('Coeficientes', default=list, blank=True)
    afirmacion = models.CharField('Afirmación', max_length=500)
    muestras = models.PositiveIntegerField('Muestras')
    residuo_rapido = models.FloatField('Residuo máximo (rápida)')
    residuo_confirmacion = models.FloatField('Residuo máximo (confirmación)')
    residuo_control = models.FloatField('Residuo de control', null=True, blank=True)
    residuo_sin_restricciones = models.FloatField('Residuo sin restricciones', null=True, blank=True)
    trivial = models.BooleanField('Trivial', default=False)

    class Meta:
        verbose_name = 'Entrada de catálogo'
        verbose_name_plural = 'Entradas de catálogo'
        ordering = ['exploracion', 'orden']

    def __str__(self):
        return self.afirmacion

    @classmethod
    def desde_registro(cls, exploracion, orden, registro):
        e, r = registro.evidencia, registro.relacion
        return cls(
            exploracion=exploracion,
            orden=orden,
            pasos=list(registro.pasos),
            tipo=r.tipo,
            operandos=list(r.operandos),
            coeficientes=list(r.coeficientes),
            afirmacion=r.afirmacion(),
            muestras=e.muestras,
            residuo_rapido=float(e.residuo_rapido),
            residuo_confirmacion=float(e.residuo_confirmacion),
            residuo_control=None if e.residuo_control is None else float(e.residuo_control),
            residuo_sin_restricciones=(
                None if e.residuo_sin_restricciones is None else float(e.residuo_sin_restricciones)
            ),
            trivial=registro.trivial,
        )

    def get_pasos_texto(self):
        return ' '.join(self.pasos) or '(intrínseca)'
    get_pasos_texto.short_description = 'Pasos'

    def fuente(self):
        """Script completo de la entrada: configuración, pasos y la relación como assert."""
        lineas = [self.exploracion.fuente.rstrip('\n'), *self.pasos, f'assert {self.afirmacion};']
        return '\n'.join(lineas) + '\n'

    def a_dict(self):
        return {
            'config': self.exploracion.configuracion,
            'constraints': self.exploracion.restricciones,
            'steps': list(self.pasos),
            'relation': {
                'kind': self.tipo,
                'operands': list(self.operandos),
                'coefficients': list(self.coeficientes),
                'assertion': self.afirmacion,
            },
            'evidence': {
                'samples': self.muestras,
                'max_residual_fast': _decimal(self.residuo_rapido),
                'max_residual_confirm': _decimal(self.residuo_confirmacion),
                'negative_control_residual': _decimal(self.residuo_control),
                'unconstrained_residual': _decimal(self.residuo_sin_restricciones),
            },
            'trivial': self.trivial,
        }
