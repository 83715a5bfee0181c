# Generated by Django 5.2.6 on 2026-10-18 12:00

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='Exploracion',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('nombre', models.CharField(blank=True, max_length=200, verbose_name='Nombre')),
                ('configuracion', models.CharField(max_length=50, verbose_name='Configuración inicial')),
                ('restricciones', models.CharField(blank=True, max_length=500, verbose_name='Restricciones')),
                ('profundidad', models.PositiveSmallIntegerField(verbose_name='Profundidad')),
                ('semilla', models.BigIntegerField(default=0, verbose_name='Semilla')),
                ('menu', models.CharField(blank=True, max_length=100, verbose_name='Menú')),
                ('muestras', models.PositiveIntegerField(verbose_name='Muestras de detección')),
                ('muestras_confirmacion', models.PositiveIntegerField(verbose_name='Muestras de confirmación')),
                ('secuencias', models.PositiveIntegerField(default=0, verbose_name='Secuencias analizadas')),
                ('fuente', models.TextField(blank=True, verbose_name='Script inicial')),
                ('omisiones', models.JSONField(blank=True, default=list, verbose_name='Secuencias omitidas')),
                ('fecha', models.DateTimeField(auto_now_add=True, verbose_name='Fecha')),
            ],
            options={
                'verbose_name': 'Exploración',
                'verbose_name_plural': 'Exploraciones',
                'ordering': ['-fecha', '-id'],
            },
        ),
        migrations.CreateModel(
            name='EntradaCatalogo',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('orden', models.PositiveIntegerField(verbose_name='Orden')),
                ('pasos', models.JSONField(blank=True, default=list, verbose_name='Pasos')),
                ('tipo', models.CharField(choices=[
                    ('collinear', 'collinear'), ('concurrent', 'concurrent'), ('parallel', 'parallel'),
                    ('perpendicular', 'perpendicular'), ('point-coincidence', 'point-coincidence'),
                    ('tangency', 'tangency'), ('congruent-circles', 'congruent-circles'),
                    ('on-circle', 'on-circle'), ('equality', 'equality'), ('rational-ratio', 'rational-ratio'),
                    ('linear-integer', 'linear-integer'), ('reciprocal', 'reciprocal'),
                    ('quadratic', 'quadratic'), ('angle-equality', 'angle-equality'),
                    ('angle-supplementary', 'angle-supplementary'),
                ], max_length=30, verbose_name='Tipo de relación')),
                ('operandos', models.JSONField(default=list, verbose_name='Operandos')),
                ('coeficientes', models.JSONField(blank=True, default=list, verbose_name='Coeficientes')),
                ('afirmacion', models.CharField(max_length=500, verbose_name='Afirmación')),
                ('muestras', models.PositiveIntegerField(verbose_name='Muestras')),
                ('residuo_rapido', models.FloatField(verbose_name='Residuo máximo (rápida)')),
                ('residuo_confirmacion', models.FloatField(verbose_name='Residuo máximo (confirmación)')),
                ('residuo_control', models.FloatField(blank=True, null=True, verbose_name='Residuo de control')),
                ('residuo_sin_restricciones', models.FloatField(blank=True, null=True, verbose_name='Residuo sin restricciones')),
                ('trivial', models.BooleanField(default=False, verbose_name='Trivial')),
                ('exploracion', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='entradas', to='explorador.exploracion', verbose_name='Exploración')),
            ],
            options={
                'verbose_name': 'Entrada de catálogo',
                'verbose_name_plural': 'Entradas de catálogo',
                'ordering': ['exploracion', 'orden'],
            },
        ),
    ]
