#pragma once

#define QWLAB_VERSION "0.1.0"
